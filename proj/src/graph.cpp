#include "rpq/graph.hpp"

#include <algorithm>
#include <sstream>

namespace rpq {

uint32_t Interner::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<uint32_t> Interner::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

LabelledGraph LabelledGraph::from_edges(Interner nodes, Interner labels,
                                        std::vector<LabelledEdge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    LabelledGraph g;
    g.nodes_ = std::move(nodes);
    g.labels_ = std::move(labels);
    g.edges_ = std::move(edges);

    for (const auto& e : g.edges_) {
        if (e.src >= g.nodes_.size() || e.dst >= g.nodes_.size() ||
            e.label >= g.labels_.size()) {
            throw LookupError("edge references an unknown node or label id");
        }
    }

    g.out_offsets_.assign(g.nodes_.size() + 1, 0);
    for (const auto& e : g.edges_) g.out_offsets_[e.src + 1]++;
    for (size_t i = 1; i < g.out_offsets_.size(); ++i) {
        g.out_offsets_[i] += g.out_offsets_[i - 1];
    }
    g.arcs_.reserve(g.edges_.size());
    for (const auto& e : g.edges_) g.arcs_.push_back({e.label, e.dst});
    return g;
}

std::span<const Arc> LabelledGraph::out(NodeId n) const {
    if (n >= nodes_.size()) throw LookupError("unknown node id");
    return {arcs_.data() + out_offsets_[n], out_offsets_[n + 1] - out_offsets_[n]};
}

std::span<const Arc> LabelledGraph::out(NodeId n, LabelId label) const {
    auto all = out(n);
    auto lo = std::lower_bound(all.begin(), all.end(), label,
                               [](const Arc& a, LabelId l) { return a.label < l; });
    auto hi = std::upper_bound(all.begin(), all.end(), label,
                               [](LabelId l, const Arc& a) { return l < a.label; });
    return {lo, hi};
}

UnlabelledGraph UnlabelledGraph::from_edges(
    Interner nodes, std::vector<std::pair<NodeId, NodeId>> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    UnlabelledGraph g;
    g.nodes_ = std::move(nodes);
    g.edges_ = std::move(edges);

    for (const auto& [src, dst] : g.edges_) {
        if (src >= g.nodes_.size() || dst >= g.nodes_.size()) {
            throw LookupError("edge references an unknown node id");
        }
    }

    g.out_offsets_.assign(g.nodes_.size() + 1, 0);
    for (const auto& e : g.edges_) g.out_offsets_[e.first + 1]++;
    for (size_t i = 1; i < g.out_offsets_.size(); ++i) {
        g.out_offsets_[i] += g.out_offsets_[i - 1];
    }
    g.successors_.reserve(g.edges_.size());
    for (const auto& e : g.edges_) g.successors_.push_back(e.second);
    return g;
}

std::span<const NodeId> UnlabelledGraph::neighbours(NodeId n) const {
    if (n >= nodes_.size()) throw LookupError("unknown node id");
    return {successors_.data() + out_offsets_[n],
            out_offsets_[n + 1] - out_offsets_[n]};
}

LabelledGraph load_labelled_graph(std::istream& in) {
    Interner nodes;
    Interner labels;
    std::vector<LabelledEdge> edges;

    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        size_t t3 = t2 == std::string::npos ? std::string::npos : line.find('\t', t2 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos || t3 != std::string::npos) {
            throw ParseError("line " + std::to_string(lineno) +
                                 ": expected src<TAB>label<TAB>dst",
                             lineno);
        }
        std::string_view view(line);
        std::string_view src = view.substr(0, t1);
        std::string_view label = view.substr(t1 + 1, t2 - t1 - 1);
        std::string_view dst = view.substr(t2 + 1);
        if (src.empty() || label.empty() || dst.empty()) {
            throw ParseError("line " + std::to_string(lineno) + ": empty field",
                             lineno);
        }
        edges.push_back({nodes.intern(src), labels.intern(label), nodes.intern(dst)});
    }
    return LabelledGraph::from_edges(std::move(nodes), std::move(labels),
                                     std::move(edges));
}

void serialize_labelled_graph(const LabelledGraph& g, std::ostream& out) {
    for (const auto& e : g.edges()) {
        out << g.nodes().name(e.src) << '\t' << g.labels().name(e.label) << '\t'
            << g.nodes().name(e.dst) << '\n';
    }
}

UnlabelledGraph strip_labels(const LabelledGraph& g) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) edges.emplace_back(e.src, e.dst);

    Interner nodes;
    for (uint32_t i = 0; i < g.nodes().size(); ++i) nodes.intern(g.nodes().name(i));
    return UnlabelledGraph::from_edges(std::move(nodes), std::move(edges));
}

namespace {

template <typename NameOf, typename LabelOf>
std::string format_path_impl(const Path& path, NameOf node_name, LabelOf label_name) {
    std::ostringstream out;
    for (size_t i = 0; i < path.nodes.size(); ++i) {
        if (i > 0) {
            if (!path.edge_labels.empty()) {
                out << " -" << label_name(path.edge_labels[i - 1]) << "-> ";
            } else {
                out << " -> ";
            }
        }
        out << node_name(path.nodes[i]);
    }
    return out.str();
}

}  // namespace

std::string format_path(const Path& path, const LabelledGraph& g) {
    return format_path_impl(
        path, [&](NodeId n) { return g.nodes().name(n); },
        [&](LabelId l) { return g.labels().name(l); });
}

std::string format_path(const Path& path, const UnlabelledGraph& g) {
    return format_path_impl(
        path, [&](NodeId n) { return g.nodes().name(n); },
        [&](LabelId l) { return std::to_string(l); });
}

}  // namespace rpq
