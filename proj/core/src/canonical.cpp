#include "rosa/canonical.hpp"

#include <algorithm>
#include <type_traits>
#include <vector>

namespace rosa {

namespace {

// No internal or probabilistic choice outside a guard. Folded variables
// count as unresolved.
bool resolved(const Process& p) {
    if (p.is<Nil>() || p.is<Prefix>()) return true;
    if (const auto* t = p.as<ExtChoice>()) return resolved(t->left) && resolved(t->right);
    if (const auto* t = p.as<Par>()) return resolved(t->left) && resolved(t->right);
    if (const auto* t = p.as<Seq>()) return resolved(t->left);
    return false;
}

class Canonicalizer {
public:
    explicit Canonicalizer(const DefinitionEnv& env) : env_(env) {}

    // `guarded` is true below a prefix or on the right of `;`, where
    // variables stay folded.
    Process run(const Process& p, bool guarded) {
        return std::visit(
            [&](const auto& t) -> Process {
                using T = std::decay_t<decltype(t)>;
                if constexpr (std::is_same_v<T, Nil>) {
                    return p;
                } else if constexpr (std::is_same_v<T, Var>) {
                    return expand(p, t, guarded);
                } else if constexpr (std::is_same_v<T, Prefix>) {
                    Process next = run(t.next, true);
                    if (same(next, t.next)) return p;
                    return prefix(t.action, t.rate, std::move(next));
                } else if constexpr (std::is_same_v<T, Seq>) {
                    Process left = run(t.left, guarded);
                    if (left.template is<Nil>()) return run(t.right, guarded);  // S1
                    Process right = run(t.right, true);
                    if (same(left, t.left) && same(right, t.right)) return p;
                    return seq(std::move(left), std::move(right));
                } else if constexpr (std::is_same_v<T, Par>) {
                    Process left = run(t.left, guarded);
                    Process right = run(t.right, guarded);
                    if (left.template is<Nil>() && right.template is<Nil>()) return nil();  // S2
                    if (key_less(pretty_print(right), pretty_print(left))) std::swap(left, right);
                    if (same(left, t.left) && same(right, t.right)) return p;
                    return par(t.sync, std::move(left), std::move(right));
                } else if constexpr (std::is_same_v<T, IntChoice> || std::is_same_v<T, ExtChoice>) {
                    Process left = run(t.left, guarded);
                    Process right = run(t.right, guarded);
                    std::string lk = pretty_print(left);
                    std::string rk = pretty_print(right);
                    // S3; for `+` only when no choice is left to resolve inside P,
                    // since (a-b)+(a-b) can still reach a+b.
                    if (lk == rk && (std::is_same_v<T, IntChoice> || resolved(left))) return left;
                    if (key_less(rk, lk)) std::swap(left, right);
                    if (same(left, t.left) && same(right, t.right)) return p;
                    return make_choice<T>(left, right);
                } else if constexpr (std::is_same_v<T, ProbChoice>) {
                    const double r = t.prob.value();
                    if (r == 1.0) return run(t.left, guarded);  // S5
                    if (r == 0.0) return run(t.right, guarded);
                    Process left = run(t.left, guarded);
                    Process right = run(t.right, guarded);
                    const std::string lk = pretty_print(left);
                    const std::string rk = pretty_print(right);
                    // Equal operands: pick the smaller of r and 1-r.
                    if (key_less(rk, lk) || (lk == rk && r > 0.5)) {
                        const Probability flipped = t.prob.complement();
                        if (flipped.value() == 1.0) return right;
                        if (flipped.value() == 0.0) return left;
                        return prob_choice(flipped, std::move(right), std::move(left));
                    }
                    if (same(left, t.left) && same(right, t.right)) return p;
                    return prob_choice(t.prob, std::move(left), std::move(right));
                }
            },
            p.node().term);
    }

private:
    static bool same(const Process& a, const Process& b) { return &a.node() == &b.node(); }

    template <class T>
    static Process make_choice(const Process& left, const Process& right) {
        if constexpr (std::is_same_v<T, IntChoice>) return int_choice(left, right);
        else return ext_choice(left, right);
    }

    Process expand(const Process& p, const Var& v, bool guarded) {
        if (guarded) return p;
        const Process* body = env_.find(v.name);
        if (body == nullptr) return p;
        // A variable reached again while its own body is being expanded is
        // unguarded recursion; leave it folded for the semantics to report.
        if (std::find(active_.begin(), active_.end(), v.name) != active_.end()) return p;
        active_.push_back(v.name);
        Process out = run(*body, false);
        active_.pop_back();
        return out;
    }

    const DefinitionEnv& env_;
    std::vector<std::string> active_;
};

}  // namespace

bool key_less(const std::string& a, const std::string& b) {
    if (a == b) return false;
    if (a == "0") return false;
    if (b == "0") return true;
    return a < b;
}

Process canonicalize(const Process& p, const DefinitionEnv& env) {
    return Canonicalizer{env}.run(p, false);
}

CanonicalKey canonical_key(const Process& p, const DefinitionEnv& env) {
    return {pretty_print(canonicalize(p, env))};
}

}  // namespace rosa
