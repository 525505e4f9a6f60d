#include "rosa/lts.hpp"

#include <utility>

namespace rosa {

LtsBuilder::LtsBuilder(const DefinitionEnv& env, BuildConfig config)
    : env_(env), config_(config) {
    if (config_.max_states == 0 || config_.max_unfold == 0) {
        throw ValidationError("max_states and max_unfold must be positive");
    }
}

Process LtsBuilder::normalize(const Process& p) const {
    return config_.canonical ? canonicalize(p, env_) : p;
}

InsertResult LtsBuilder::find_or_insert(const Process& p) {
    std::string key = pretty_print(p);
    if (auto it = index_.find(key); it != index_.end()) return {it->second, InsertStatus::Existing};
    if (lts_.nodes.size() >= config_.max_states) return {0, InsertStatus::LimitReached};

    const auto id = static_cast<NodeId>(lts_.nodes.size());
    NodeKind kind = classify(p, env_, config_.max_unfold);
    index_.emplace(key, id);
    lts_.nodes.push_back({id, p, CanonicalKey{std::move(key)}, kind});
    return {id, InsertStatus::Inserted};
}

void LtsBuilder::add_edge(NodeId source, NodeId target, TransitionLabel label) {
    std::string key = std::to_string(source) + '|' + std::to_string(target) + '|' + to_string(label);
    if (!edge_index_.insert(std::move(key)).second) return;
    lts_.edges.push_back({source, target, std::move(label)});
}

Lts build_lts(const DefinitionEnv& env, const BuildConfig& config) {
    if (!env.contains(env.root())) throw UnboundVariable(env.root());
    LtsBuilder builder{env, config};
    const Process start = config.canonical ? canonicalize(var(env.root()), env) : env.lookup(env.root());
    builder.find_or_insert(start);

    for (std::size_t current = 0; current < builder.lts().nodes.size(); ++current) {
        const LtsNode node = builder.lts().nodes[current];
        const auto steps = successors(node.process, node.kind, env, config.max_unfold);

        // Probabilistic outcomes that land in the same state are merged so
        // that each distribution keeps summing to one.
        std::vector<std::pair<NodeId, TransitionLabel>> out;
        for (const auto& step : steps) {
            const InsertResult r = builder.find_or_insert(builder.normalize(step.target));
            if (r.status == InsertStatus::LimitReached) {
                builder.set_truncated();
                return std::move(builder).take();
            }
            if (const auto* pl = std::get_if<ProbLabel>(&step.label)) {
                bool merged = false;
                for (auto& [target, label] : out) {
                    if (target == r.id) {
                        std::get<ProbLabel>(label).p += pl->p;
                        merged = true;
                        break;
                    }
                }
                if (merged) continue;
            }
            out.emplace_back(r.id, step.label);
        }
        for (auto& [target, label] : out) builder.add_edge(node.id, target, std::move(label));
    }
    return std::move(builder).take();
}

LtsStats stats(const Lts& lts) {
    LtsStats s;
    s.node_count = lts.nodes.size();
    s.edge_count = lts.edges.size();
    s.truncated = lts.truncated;
    for (const auto& n : lts.nodes) {
        if (n.kind == NodeKind::Deadlock) ++s.deadlock_count;
        if (n.kind == NodeKind::Success) ++s.success_count;
    }
    return s;
}

}  // namespace rosa
