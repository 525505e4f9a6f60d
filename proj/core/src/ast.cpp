#include "rosa/ast.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <type_traits>

namespace rosa {

namespace {

bool is_ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

Process make(auto term) {
    return Process{std::make_shared<const ProcessNode>(ProcessNode{std::move(term)})};
}

// Binding strength used by the printer; larger binds tighter.
enum Level { kSeq = 1, kPar = 2, kChoice = 3, kPrefix = 4, kAtom = 5 };

int level(const Process& p) {
    return std::visit(
        [](const auto& t) -> int {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Seq>) return kSeq;
            else if constexpr (std::is_same_v<T, Par>) return kPar;
            else if constexpr (std::is_same_v<T, IntChoice> || std::is_same_v<T, ExtChoice> ||
                               std::is_same_v<T, ProbChoice>)
                return kChoice;
            else if constexpr (std::is_same_v<T, Prefix>) return kPrefix;
            else return kAtom;
        },
        p.node().term);
}

void print(const Process& p, std::string& out);

void print_operand(const Process& p, bool parens, std::string& out) {
    if (parens) out += '(';
    print(p, out);
    if (parens) out += ')';
}

// Left-associative binary operator at `lvl`.
void print_left_assoc(const Process& l, std::string_view op, const Process& r, int lvl,
                      std::string& out) {
    print_operand(l, level(l) < lvl, out);
    out += op;
    print_operand(r, level(r) <= lvl, out);
}

void print(const Process& p, std::string& out) {
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Nil>) {
                out += '0';
            } else if constexpr (std::is_same_v<T, Var>) {
                out += t.name;
            } else if constexpr (std::is_same_v<T, Prefix>) {
                if (t.rate.is_infinite()) {
                    out += t.action.str();
                } else {
                    out += '<';
                    out += t.action.str();
                    out += ',';
                    out += format_number(t.rate.value());
                    out += '>';
                }
                out += '.';
                print_operand(t.next, level(t.next) < kPrefix, out);
            } else if constexpr (std::is_same_v<T, Seq>) {
                // right-associative
                print_operand(t.left, level(t.left) <= kSeq, out);
                out += ';';
                print_operand(t.right, false, out);
            } else if constexpr (std::is_same_v<T, IntChoice>) {
                print_left_assoc(t.left, "-", t.right, kChoice, out);
            } else if constexpr (std::is_same_v<T, ExtChoice>) {
                print_left_assoc(t.left, "+", t.right, kChoice, out);
            } else if constexpr (std::is_same_v<T, ProbChoice>) {
                std::string op = "*{" + format_number(t.prob.value()) + "}";
                print_left_assoc(t.left, op, t.right, kChoice, out);
            } else if constexpr (std::is_same_v<T, Par>) {
                std::string op = "||{";
                bool first = true;
                for (const auto& a : t.sync) {
                    if (!first) op += ',';
                    op += a.str();
                    first = false;
                }
                op += '}';
                print_left_assoc(t.left, op, t.right, kPar, out);
            }
        },
        p.node().term);
}

}  // namespace

bool is_identifier(std::string_view text) {
    if (text.empty() || !is_ident_start(text.front())) return false;
    for (char c : text) {
        if (!is_ident_char(c)) return false;
    }
    return text != "inf";
}

ActionName::ActionName(std::string name) : name_(std::move(name)) {
    if (!is_identifier(name_)) throw ValidationError("invalid action name '" + name_ + "'");
}

Rate Rate::finite(double value) {
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw ValidationError("rate must be a positive real number, got " + format_number(value));
    }
    Rate r;
    r.infinite_ = false;
    r.value_ = value;
    return r;
}

Probability::Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ValidationError("probability must lie in [0,1], got " + format_number(value));
    }
}

Probability Probability::complement() const {
    std::array<char, 32> buf{};
    const auto [end, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), 1.0 - value_, std::chars_format::general, 15);
    double rounded = 1.0 - value_;
    if (ec == std::errc{}) std::from_chars(buf.data(), end, rounded);
    return Probability{std::clamp(rounded, 0.0, 1.0)};
}

SyncSet::SyncSet(std::initializer_list<std::string> names) {
    for (const auto& n : names) names_.insert(ActionName{n});
}

bool SyncSet::contains(std::string_view name) const {
    for (const auto& a : names_) {
        if (a.str() == name) return true;
    }
    return false;
}

Process nil() {
    static const Process shared = make(Nil{});
    return shared;
}

Process var(std::string name) {
    if (!is_identifier(name)) throw ValidationError("invalid process name '" + name + "'");
    return make(Var{std::move(name)});
}

Process prefix(ActionName action, Rate rate, Process next) {
    return make(Prefix{std::move(action), rate, std::move(next)});
}

Process prefix(std::string action, Process next) {
    return prefix(ActionName{std::move(action)}, Rate::infinite(), std::move(next));
}

Process prefix(std::string action, double rate, Process next) {
    return prefix(ActionName{std::move(action)}, Rate::finite(rate), std::move(next));
}

Process seq(Process left, Process right) { return make(Seq{std::move(left), std::move(right)}); }

Process int_choice(Process left, Process right) {
    return make(IntChoice{std::move(left), std::move(right)});
}

Process ext_choice(Process left, Process right) {
    return make(ExtChoice{std::move(left), std::move(right)});
}

Process prob_choice(Probability prob, Process left, Process right) {
    return make(ProbChoice{prob, std::move(left), std::move(right)});
}

Process prob_choice(double prob, Process left, Process right) {
    return prob_choice(Probability{prob}, std::move(left), std::move(right));
}

Process par(SyncSet sync, Process left, Process right) {
    return make(Par{std::move(sync), std::move(left), std::move(right)});
}

bool structural_equal(const Process& p, const Process& q) {
    if (p.get() == q.get()) return true;
    const auto& a = p.node().term;
    const auto& b = q.node().term;
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, Nil>) {
                return true;
            } else if constexpr (std::is_same_v<T, Var>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<T, Prefix>) {
                return x.action == y.action && x.rate == y.rate && structural_equal(x.next, y.next);
            } else if constexpr (std::is_same_v<T, ProbChoice>) {
                return x.prob == y.prob && structural_equal(x.left, y.left) &&
                       structural_equal(x.right, y.right);
            } else if constexpr (std::is_same_v<T, Par>) {
                return x.sync == y.sync && structural_equal(x.left, y.left) &&
                       structural_equal(x.right, y.right);
            } else {
                return structural_equal(x.left, y.left) && structural_equal(x.right, y.right);
            }
        },
        a);
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

std::string format_rate(const Rate& rate) {
    return rate.is_infinite() ? std::string{"inf"} : format_number(rate.value());
}

std::string pretty_print(const Process& p) {
    std::string out;
    print(p, out);
    return out;
}

std::size_t size(const Process& p) {
    return std::visit(
        [](const auto& t) -> std::size_t {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Nil> || std::is_same_v<T, Var>) return 1;
            else if constexpr (std::is_same_v<T, Prefix>) return 1 + size(t.next);
            else return 1 + size(t.left) + size(t.right);
        },
        p.node().term);
}

void DefinitionEnv::bind(const std::string& name, Process body, Position where) {
    if (!is_identifier(name)) throw ValidationError("invalid process name '" + name + "'", where);
    if (!bindings_.emplace(name, std::move(body)).second) throw DuplicateDefinition(name, where);
}

const Process& DefinitionEnv::lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) throw UnboundVariable(name);
    return it->second;
}

const Process* DefinitionEnv::find(const std::string& name) const {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
}

void DefinitionEnv::set_root(const std::string& name) {
    if (!contains(name)) throw UnboundVariable(name);
    root_ = name;
}

const Process& lookup(const DefinitionEnv& env, const std::string& name) {
    return env.lookup(name);
}

}  // namespace rosa
