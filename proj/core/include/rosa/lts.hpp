#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rosa/ast.hpp"
#include "rosa/canonical.hpp"
#include "rosa/semantics.hpp"

namespace rosa {

using NodeId = std::uint32_t;

struct LtsNode {
    NodeId id;
    Process process;
    CanonicalKey key;
    NodeKind kind;
};

struct LtsEdge {
    NodeId source;
    NodeId target;
    TransitionLabel label;
};

struct Lts {
    std::vector<LtsNode> nodes;
    std::vector<LtsEdge> edges;
    bool truncated = false;

    static constexpr NodeId root = 0;
};

struct BuildConfig {
    std::size_t max_states = 100000;
    std::size_t max_unfold = kDefaultMaxUnfold;
    /// When false, states are identified by their literal syntax only; used
    /// to cross-check the canonical build.
    bool canonical = true;
};

struct LtsStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::size_t deadlock_count = 0;
    std::size_t success_count = 0;
    bool truncated = false;

    friend bool operator==(const LtsStats&, const LtsStats&) = default;
};

enum class InsertStatus { Existing, Inserted, LimitReached };

struct InsertResult {
    NodeId id;
    InsertStatus status;

    bool is_new() const noexcept { return status == InsertStatus::Inserted; }
};

/// Owns an Lts under construction together with its key index.
class LtsBuilder {
public:
    LtsBuilder(const DefinitionEnv& env, BuildConfig config);

    /// `p` must already be in the form states are stored in (canonical
    /// unless the config says otherwise). Refuses to grow past max_states.
    InsertResult find_or_insert(const Process& p);

    /// Brings a successor into stored form.
    Process normalize(const Process& p) const;

    /// Adds an edge unless the same (source, target, label) already exists.
    void add_edge(NodeId source, NodeId target, TransitionLabel label);

    void set_truncated() { lts_.truncated = true; }

    const Lts& lts() const noexcept { return lts_; }
    Lts take() && { return std::move(lts_); }

private:
    const DefinitionEnv& env_;
    BuildConfig config_;
    Lts lts_;
    std::unordered_map<std::string, NodeId> index_;
    std::unordered_set<std::string> edge_index_;
};

/// Breadth-first exploration from the root definition until no new state
/// appears or max_states is reached (then `truncated` is set).
Lts build_lts(const DefinitionEnv& env, const BuildConfig& config = {});

LtsStats stats(const Lts& lts);

}  // namespace rosa
