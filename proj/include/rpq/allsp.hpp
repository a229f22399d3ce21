#ifndef RPQ_ALLSP_HPP
#define RPQ_ALLSP_HPP

#include <functional>

#include "rpq/dag.hpp"
#include "rpq/graph.hpp"

namespace rpq {

// Called once per reachable node, at pop time, in nondecreasing depth order.
// The entry's prevList is complete when the callback fires; paths to it can
// be decoded immediately even though the DAG is still growing.
using SolutionCallback =
    std::function<void(NodeId node, uint32_t depth, EntryId entry)>;

// Single-source all-shortest-paths BFS. Returns the finished prevList DAG;
// on_solution may be empty.
PathDag all_shortest_search(const UnlabelledGraph& g, NodeId source,
                            const SolutionCallback& on_solution = {});

}  // namespace rpq

#endif
