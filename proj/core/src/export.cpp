#include "rosa/export.hpp"

#include <sstream>
#include <type_traits>

#include <nlohmann/json.hpp>

namespace rosa {

namespace {

std::string stats_line(const Lts& lts) {
    const LtsStats s = stats(lts);
    std::ostringstream out;
    out << "nodes=" << s.node_count << " edges=" << s.edge_count
        << " deadlock=" << s.deadlock_count << " success=" << s.success_count
        << " truncated=" << (s.truncated ? "true" : "false");
    return out.str();
}

const char* fill_color(NodeKind kind) {
    switch (kind) {
        case NodeKind::Deadlock: return "red";
        case NodeKind::Success: return "green";
        default: return "white";
    }
}

nlohmann::ordered_json label_json(const TransitionLabel& label) {
    return std::visit(
        [](const auto& l) {
            using T = std::decay_t<decltype(l)>;
            nlohmann::ordered_json j;
            if constexpr (std::is_same_v<T, NdBranch>) {
                j["type"] = "nd";
                j["path"] = l.path;
            } else if constexpr (std::is_same_v<T, ProbLabel>) {
                j["type"] = "prob";
                j["p"] = l.p;
            } else {
                j["type"] = "action";
                j["name"] = l.name.str();
                if (l.rate.is_infinite()) j["rate"] = "inf";
                else j["rate"] = l.rate.value();
            }
            return j;
        },
        label);
}

}  // namespace

std::string dot_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string to_text(const Lts& lts, const ExportOptions& opts) {
    std::ostringstream out;
    for (const auto& n : lts.nodes) {
        out << '#' << n.id << " [" << to_string(n.kind) << ']';
        if (opts.node_labels != NodeLabels::Id) out << ' ' << n.key.key;
        out << '\n';
    }
    for (const auto& e : lts.edges) {
        out << '#' << e.source << " -" << to_string(e.label) << "-> #" << e.target << '\n';
    }
    if (opts.include_stats) out << "stats: " << stats_line(lts) << '\n';
    return out.str();
}

std::string to_dot(const Lts& lts, const ExportOptions& opts) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (const auto& n : lts.nodes) {
        std::string label;
        switch (opts.node_labels) {
            case NodeLabels::Id: label = '#' + std::to_string(n.id); break;
            case NodeLabels::Expression: label = dot_escape(n.key.key); break;
            case NodeLabels::Both:
                label = '#' + std::to_string(n.id) + "\\n" + dot_escape(n.key.key);
                break;
        }
        out << "  n" << n.id << " [label=\"" << label << "\", style=filled, fillcolor=\""
            << fill_color(n.kind) << '"';
        if (n.id == Lts::root) out << ", penwidth=2";
        out << "];\n";
    }
    for (const auto& e : lts.edges) {
        out << "  n" << e.source << " -> n" << e.target << " [label=\""
            << dot_escape(to_string(e.label)) << "\"];\n";
    }
    if (opts.include_stats) out << "  // " << stats_line(lts) << '\n';
    out << "}\n";
    return out.str();
}

std::string to_json(const Lts& lts) {
    nlohmann::ordered_json doc;
    doc["root"] = Lts::root;
    doc["truncated"] = lts.truncated;
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& n : lts.nodes) {
        nlohmann::ordered_json j;
        j["id"] = n.id;
        j["kind"] = std::string{to_string(n.kind)};
        j["expr"] = n.key.key;
        nodes.push_back(std::move(j));
    }
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : lts.edges) {
        nlohmann::ordered_json j;
        j["src"] = e.source;
        j["dst"] = e.target;
        j["label"] = label_json(e.label);
        edges.push_back(std::move(j));
    }
    doc["nodes"] = std::move(nodes);
    doc["edges"] = std::move(edges);
    return doc.dump();
}

}  // namespace rosa
