#pragma once

#include <string>

#include "rosa/lts.hpp"

namespace rosa {

enum class NodeLabels { Id, Expression, Both };

struct ExportOptions {
    NodeLabels node_labels = NodeLabels::Both;
    bool include_stats = true;
};

/// `#<id> [<kind>] <expr>` per node, then `#<src> -<label>-> #<dst>` per edge.
std::string to_text(const Lts& lts, const ExportOptions& opts = {});

/// Graphviz digraph; deadlocks are red, successes green, the root has a
/// thicker border.
std::string to_dot(const Lts& lts, const ExportOptions& opts = {});

std::string to_json(const Lts& lts);

/// Escapes `"` and `\` for a DOT quoted string.
std::string dot_escape(const std::string& text);

}  // namespace rosa
