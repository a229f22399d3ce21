#ifndef RPQ_ENGINE_HPP
#define RPQ_ENGINE_HPP

#include <functional>
#include <span>
#include <vector>

#include "rpq/automaton.hpp"
#include "rpq/dag.hpp"
#include "rpq/enumerate.hpp"
#include "rpq/graph.hpp"
#include "rpq/regex.hpp"

namespace rpq {

// A node of the product graph: database node paired with a DFA state.
struct ProductState {
    NodeId node;
    uint32_t state;

    friend bool operator==(const ProductState&, const ProductState&) = default;
};

// An RPQ (source, regex, ?x) compiled against a concrete graph: the query
// automaton is determinize(glushkov(ast)) and label_map translates graph
// label ids into the automaton's alphabet (-1 when the label does not occur
// in the regex).
struct Rpq {
    NodeId source;
    RegexPtr ast;
    Dfa dfa;
    std::vector<int32_t> label_map;
    bool accepts_empty = false;
};

Rpq compile_rpq(const LabelledGraph& g, NodeId source, RegexPtr ast);
Rpq compile_rpq(const LabelledGraph& g, std::string_view source_name,
                std::string_view regex_text);

// Successors of p in the product graph, ordered by graph label id then
// successor node id.
struct ProductArc {
    ProductState to;
    LabelId label;
};
std::vector<ProductArc> product_neighbours(const LabelledGraph& g, const Rpq& q,
                                           ProductState p);

// The nodes answering the query, in nondecreasing-depth discovery order.
std::vector<NodeId> eval_reach(const LabelledGraph& g, const Rpq& q);

// One shortest witnessing path per answer node, emitted in nondecreasing
// path length.
using SinglePathCallback = std::function<void(NodeId node, const Path& path)>;
void eval_single_path(const LabelledGraph& g, const Rpq& q,
                      const SinglePathCallback& on_solution);

// Handle passed to the all-shortest callback: the final-state entries for one
// answer node at its answer depth. Valid only inside the callback (the DAG is
// still under construction); all paths to these entries are already complete.
class AnswerPaths {
public:
    AnswerPaths(const PathDag& dag, std::span<const EntryId> entries)
        : dag_(&dag), entries_(entries) {}

    // Visits every shortest witnessing path exactly once, in enumeration
    // order; return false from the visitor to stop early. Returns false when
    // stopped early.
    bool for_each(const std::function<bool(const Path&)>& visit) const;

    std::vector<Path> collect() const;
    BigInt count() const;
    std::span<const EntryId> entries() const { return entries_; }

private:
    const PathDag* dag_;
    std::span<const EntryId> entries_;
};

using AllShortestCallback =
    std::function<void(NodeId node, uint32_t depth, const AnswerPaths& paths)>;

// All-shortest evaluation over the product graph. Answers are grouped per
// node: entries for the same node popped in different final states at the
// answer depth form one answer; deeper arrivals through other final states
// are suppressed (first-pop dictionary). Returns the finished product DAG.
PathDag eval_all_shortest(const LabelledGraph& g, const Rpq& q,
                          const AllShortestCallback& on_solution);

using CountCallback =
    std::function<void(NodeId node, uint32_t depth, const BigInt& count)>;

// Shortest-path counting; same answer grouping as eval_all_shortest but only
// path multiplicities are propagated.
void eval_count(const LabelledGraph& g, const Rpq& q,
                const CountCallback& on_solution);

}  // namespace rpq

#endif
