#ifndef RPQ_GRAPH_HPP
#define RPQ_GRAPH_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rpq {

using NodeId = uint32_t;
using LabelId = uint32_t;

// Thrown on malformed input files / query syntax; `position` is a line
// number for graph files and a character offset for regexes.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}

    size_t position() const { return position_; }

private:
    size_t position_;
};

class LookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bijection between opaque strings and dense ids 0..size()-1.
class Interner {
public:
    uint32_t intern(std::string_view name);
    std::optional<uint32_t> find(std::string_view name) const;
    const std::string& name(uint32_t id) const { return names_.at(id); }
    uint32_t size() const { return static_cast<uint32_t>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, uint32_t> ids_;
};

struct LabelledEdge {
    NodeId src;
    LabelId label;
    NodeId dst;

    friend auto operator<=>(const LabelledEdge&, const LabelledEdge&) = default;
};

struct Arc {
    LabelId label;
    NodeId dst;
};

// Edge-labelled directed graph, immutable after build. Adjacency per node is
// sorted by (label id, successor id) so traversal order is reproducible.
class LabelledGraph {
public:
    static LabelledGraph from_edges(Interner nodes, Interner labels,
                                    std::vector<LabelledEdge> edges);

    const Interner& nodes() const { return nodes_; }
    const Interner& labels() const { return labels_; }
    const std::vector<LabelledEdge>& edges() const { return edges_; }

    uint32_t node_count() const { return nodes_.size(); }
    size_t edge_count() const { return edges_.size(); }

    std::span<const Arc> out(NodeId n) const;
    // Successors of n over one label, ascending node id.
    std::span<const Arc> out(NodeId n, LabelId label) const;

private:
    Interner nodes_;
    Interner labels_;
    std::vector<LabelledEdge> edges_;  // sorted, duplicate-free
    std::vector<size_t> out_offsets_;  // CSR over arcs_, per node
    std::vector<Arc> arcs_;
};

class UnlabelledGraph {
public:
    static UnlabelledGraph from_edges(Interner nodes,
                                      std::vector<std::pair<NodeId, NodeId>> edges);

    const Interner& nodes() const { return nodes_; }
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    uint32_t node_count() const { return nodes_.size(); }
    size_t edge_count() const { return edges_.size(); }

    std::span<const NodeId> neighbours(NodeId n) const;

private:
    Interner nodes_;
    std::vector<std::pair<NodeId, NodeId>> edges_;  // sorted, duplicate-free
    std::vector<size_t> out_offsets_;
    std::vector<NodeId> successors_;
};

// One edge per line: src<TAB>label<TAB>dst. Blank lines and lines starting
// with '#' are skipped. Duplicate triples collapse.
LabelledGraph load_labelled_graph(std::istream& in);

// Inverse of load_labelled_graph up to edge order (emits sorted edges).
void serialize_labelled_graph(const LabelledGraph& g, std::ostream& out);

// Projects away labels; parallel labelled edges collapse to one.
UnlabelledGraph strip_labels(const LabelledGraph& g);

// A path n1 .. n_{k+1}; edge_labels has k entries for labelled paths and is
// empty for unlabelled ones.
struct Path {
    std::vector<NodeId> nodes;
    std::vector<LabelId> edge_labels;

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

std::string format_path(const Path& path, const LabelledGraph& g);
std::string format_path(const Path& path, const UnlabelledGraph& g);

}  // namespace rpq

#endif
