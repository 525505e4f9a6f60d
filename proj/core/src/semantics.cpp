#include "rosa/semantics.hpp"

#include <type_traits>
#include <unordered_map>

namespace rosa {

namespace {

enum class Side { Left, Right };

// Rebuilds a binary congruence context around new operands.
Process rebuild(const Process& ctx, Process left, Process right) {
    return std::visit(
        [&](const auto& t) -> Process {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, ExtChoice>) {
                return ext_choice(std::move(left), std::move(right));
            } else if constexpr (std::is_same_v<T, ProbChoice>) {
                return prob_choice(t.prob, std::move(left), std::move(right));
            } else if constexpr (std::is_same_v<T, Par>) {
                return par(t.sync, std::move(left), std::move(right));
            } else if constexpr (std::is_same_v<T, Seq>) {
                return seq(std::move(left), std::move(right));
            } else if constexpr (std::is_same_v<T, IntChoice>) {
                return int_choice(std::move(left), std::move(right));
            } else {
                throw ContractViolation("rebuild on a non-binary term");
            }
        },
        ctx.node().term);
}

// Operands of the congruence positions (ExtChoice, ProbChoice, Par).
struct Operands {
    const Process* left = nullptr;
    const Process* right = nullptr;
};

Operands congruence_operands(const Process& p) {
    if (const auto* t = p.as<ExtChoice>()) return {&t->left, &t->right};
    if (const auto* t = p.as<ProbChoice>()) return {&t->left, &t->right};
    if (const auto* t = p.as<Par>()) return {&t->left, &t->right};
    return {};
}

// The unfold budget bounds the number of variable replacements on the
// current recursion path, so `P = a.0+P` fails while a large term with many
// independent variables does not.
class Evaluator {
public:
    Evaluator(const DefinitionEnv& env, std::size_t budget) : env_(env), budget_(budget) {}

    Process unfold(Process p) {
        std::size_t used = 0;
        return unfold(std::move(p), used);
    }

private:
    class Unfolded {
    public:
        Unfolded(Evaluator& ev, const Process& in) : ev_(ev), p_(ev.unfold(in, used_)) {}
        ~Unfolded() { ev_.depth_ -= used_; }
        Unfolded(const Unfolded&) = delete;
        Unfolded& operator=(const Unfolded&) = delete;

        const Process& operator*() const { return p_; }
        const Process* operator->() const { return &p_; }

    private:
        Evaluator& ev_;
        std::size_t used_ = 0;
        Process p_;
    };

    Process unfold(Process p, std::size_t& used) {
        while (const auto* v = p.as<Var>()) {
            if (depth_ >= budget_) {
                depth_ -= used;
                used = 0;
                throw UnguardedRecursion(v->name);
            }
            ++depth_;
            ++used;
            p = env_.lookup(v->name);
        }
        return p;
    }

public:

    // Memoized by node: `;` spines are re-examined at every level.
    bool terminated(const Process& in) {
        if (auto it = terminated_.find(&in.node()); it != terminated_.end()) return it->second;
        const Unfolded u{*this, in};
        const Process& p = *u;
        bool result = false;
        if (p.is<Nil>()) result = true;
        else if (const auto* t = p.as<Seq>()) result = terminated(t->left) && terminated(t->right);
        else if (const auto* t = p.as<Par>()) result = terminated(t->left) && terminated(t->right);
        else if (const auto* t = p.as<ExtChoice>()) result = terminated(t->left) && terminated(t->right);
        terminated_.emplace(&in.node(), result);
        return result;
    }

    // Shared recursion of both stability predicates; `Unstable` is the
    // constructor that breaks stability.
    template <class Unstable>
    bool stable(const Process& in) {
        const Unfolded u{*this, in};
        const Process& p = *u;
        if (p.is<Unstable>()) return false;
        if (const auto* t = p.as<Seq>()) {
            return terminated(t->left) ? stable<Unstable>(t->right) : stable<Unstable>(t->left);
        }
        if (auto ops = congruence_operands(p); ops.left) {
            return stable<Unstable>(*ops.left) && stable<Unstable>(*ops.right);
        }
        if (const auto* t = p.as<IntChoice>()) {
            return stable<Unstable>(t->left) && stable<Unstable>(t->right);
        }
        return true;
    }

    bool det_stable(const Process& p) { return stable<IntChoice>(p); }
    bool prob_stable(const Process& p) { return stable<ProbChoice>(p); }

    std::vector<NdStep> nd(const Process& in) {
        const Unfolded u{*this, in};
        const Process& p = *u;
        std::vector<NdStep> out;
        if (const auto* t = p.as<IntChoice>()) {
            out.push_back({"L", t->left});
            out.push_back({"R", t->right});
        } else if (const auto* t = p.as<Seq>()) {
            if (terminated(t->left)) {
                for (auto& s : nd(t->right)) out.push_back({"R." + s.path, std::move(s.target)});
            } else {
                for (auto& s : nd(t->left)) {
                    out.push_back({"L." + s.path, seq(std::move(s.target), t->right)});
                }
            }
        } else if (auto ops = congruence_operands(p); ops.left) {
            if (!det_stable(*ops.left)) {
                for (auto& s : nd(*ops.left)) {
                    out.push_back({"L." + s.path, rebuild(p, std::move(s.target), *ops.right)});
                }
            }
            if (!det_stable(*ops.right)) {
                for (auto& s : nd(*ops.right)) {
                    out.push_back({"R." + s.path, rebuild(p, *ops.left, std::move(s.target))});
                }
            }
        }
        return out;
    }

    std::vector<ProbStep> prob(const Process& in) {
        const Unfolded u{*this, in};
        const Process& p = *u;
        std::vector<ProbStep> out;
        if (const auto* t = p.as<ProbChoice>()) {
            const double r = t->prob.value();
            append_scaled(out, t->left, r);
            append_scaled(out, t->right, 1.0 - r);
        } else if (const auto* t = p.as<Seq>()) {
            if (terminated(t->left)) return prob(t->right);
            for (auto& s : prob(t->left)) out.push_back({s.p, seq(std::move(s.target), t->right)});
        } else if (auto ops = congruence_operands(p); ops.left) {
            auto lhs = resolve_or_keep(*ops.left);
            auto rhs = resolve_or_keep(*ops.right);
            for (const auto& l : lhs) {
                for (const auto& r : rhs) {
                    const double pr = l.p * r.p;
                    if (pr > 0.0) out.push_back({pr, rebuild(p, l.target, r.target)});
                }
            }
        }
        return out;
    }

    std::vector<ActionStep> act(const Process& in) {
        const Unfolded u{*this, in};
        const Process& p = *u;
        std::vector<ActionStep> out;
        std::visit(
            [&](const auto& t) {
                using T = std::decay_t<decltype(t)>;
                if constexpr (std::is_same_v<T, Prefix>) {
                    out.push_back({t.action, t.rate, t.next});
                } else if constexpr (std::is_same_v<T, ExtChoice>) {
                    out = act(t.left);
                    auto rhs = act(t.right);
                    out.insert(out.end(), rhs.begin(), rhs.end());
                } else if constexpr (std::is_same_v<T, Seq>) {
                    if (terminated(t.left)) {
                        out = act(t.right);
                    } else {
                        for (auto& s : act(t.left)) {
                            out.push_back({s.name, s.rate, seq(std::move(s.target), t.right)});
                        }
                    }
                } else if constexpr (std::is_same_v<T, Par>) {
                    parallel(t, out);
                } else if constexpr (std::is_same_v<T, IntChoice> || std::is_same_v<T, ProbChoice>) {
                    throw ContractViolation("action_successors on an unstable process: " +
                                            pretty_print(p));
                }
            },
            p.node().term);
        return out;
    }

private:
    void append_scaled(std::vector<ProbStep>& out, const Process& branch, double weight) {
        if (!(weight > 0.0)) return;
        for (auto& s : resolve_or_keep(branch)) {
            const double pr = weight * s.p;
            if (pr > 0.0) out.push_back({pr, std::move(s.target)});
        }
    }

    std::vector<ProbStep> resolve_or_keep(const Process& p) {
        if (prob_stable(p)) return {{1.0, p}};
        return prob(p);
    }

    // Interleaving moves of each side first, then joint moves on the sync set.
    void parallel(const Par& t, std::vector<ActionStep>& out) {
        const auto lhs = act(t.left);
        const auto rhs = act(t.right);
        for (const auto& s : lhs) {
            if (!t.sync.contains(s.name.str())) {
                out.push_back({s.name, s.rate, par(t.sync, s.target, t.right)});
            }
        }
        for (const auto& s : rhs) {
            if (!t.sync.contains(s.name.str())) {
                out.push_back({s.name, s.rate, par(t.sync, t.left, s.target)});
            }
        }
        for (const auto& l : lhs) {
            if (!t.sync.contains(l.name.str())) continue;
            for (const auto& r : rhs) {
                if (r.name == l.name) {
                    out.push_back({l.name, sync_rate(l.rate, r.rate), par(t.sync, l.target, r.target)});
                }
            }
        }
    }

    const DefinitionEnv& env_;
    std::size_t budget_;
    std::size_t depth_ = 0;
    std::unordered_map<const ProcessNode*, bool> terminated_;
};

}  // namespace

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::NdUnstable: return "nd";
        case NodeKind::ProbUnstable: return "prob";
        case NodeKind::ActionEnabled: return "action";
        case NodeKind::Deadlock: return "deadlock";
        case NodeKind::Success: return "success";
    }
    return "?";
}

Process unfold(const Process& p, const DefinitionEnv& env, std::size_t budget) {
    return Evaluator{env, budget}.unfold(p);
}

bool is_det_stable(const Process& p, const DefinitionEnv& env, std::size_t budget) {
    return Evaluator{env, budget}.det_stable(p);
}

bool is_prob_stable(const Process& p, const DefinitionEnv& env, std::size_t budget) {
    return Evaluator{env, budget}.prob_stable(p);
}

bool is_terminated(const Process& p, const DefinitionEnv& env, std::size_t budget) {
    return Evaluator{env, budget}.terminated(p);
}

std::vector<NdStep> nd_successors(const Process& p, const DefinitionEnv& env, std::size_t budget) {
    Evaluator ev{env, budget};
    if (ev.det_stable(p)) {
        throw ContractViolation("nd_successors on a deterministically stable process: " +
                                pretty_print(p));
    }
    return ev.nd(p);
}

std::vector<ProbStep> prob_successors(const Process& p, const DefinitionEnv& env,
                                      std::size_t budget) {
    Evaluator ev{env, budget};
    if (!ev.det_stable(p) || ev.prob_stable(p)) {
        throw ContractViolation("prob_successors requires a det-stable, prob-unstable process: " +
                                pretty_print(p));
    }
    return ev.prob(p);
}

std::vector<ActionStep> action_successors(const Process& p, const DefinitionEnv& env,
                                          std::size_t budget) {
    Evaluator ev{env, budget};
    if (!ev.det_stable(p) || !ev.prob_stable(p)) {
        throw ContractViolation("action_successors on an unstable process: " + pretty_print(p));
    }
    return ev.act(p);
}

Rate sync_rate(const Rate& a, const Rate& b) {
    if (a.is_infinite()) return b;
    if (b.is_infinite()) return a;
    return a.value() <= b.value() ? a : b;
}

NodeKind classify(const Process& p, const DefinitionEnv& env, std::size_t budget) {
    Evaluator ev{env, budget};
    if (!ev.det_stable(p)) return NodeKind::NdUnstable;
    if (!ev.prob_stable(p)) return NodeKind::ProbUnstable;
    if (ev.terminated(p)) return NodeKind::Success;
    if (!ev.act(p).empty()) return NodeKind::ActionEnabled;
    return NodeKind::Deadlock;
}

std::vector<Step> successors(const Process& p, NodeKind kind, const DefinitionEnv& env,
                             std::size_t budget) {
    Evaluator ev{env, budget};
    std::vector<Step> out;
    switch (kind) {
        case NodeKind::NdUnstable:
            for (auto& s : ev.nd(p)) out.push_back({NdBranch{std::move(s.path)}, std::move(s.target)});
            break;
        case NodeKind::ProbUnstable:
            for (auto& s : ev.prob(p)) out.push_back({ProbLabel{s.p}, std::move(s.target)});
            break;
        case NodeKind::ActionEnabled:
            for (auto& s : ev.act(p)) {
                out.push_back({ActionLabel{std::move(s.name), s.rate}, std::move(s.target)});
            }
            break;
        case NodeKind::Deadlock:
        case NodeKind::Success:
            break;
    }
    return out;
}

std::string to_string(const TransitionLabel& label) {
    return std::visit(
        [](const auto& l) -> std::string {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, NdBranch>) return "nd:" + l.path;
            else if constexpr (std::is_same_v<T, ProbLabel>) return "p=" + format_number(l.p);
            else return l.name.str() + "," + format_rate(l.rate);
        },
        label);
}

}  // namespace rosa
