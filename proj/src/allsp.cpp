#include "rpq/allsp.hpp"

#include <cassert>

namespace rpq {

DagStats dag_stats(const PathDag& dag) {
    DagStats stats;
    stats.entry_count = dag.entries.size();
    for (const auto& e : dag.entries) stats.reference_count += e.prev.size();
    return stats;
}

PathDag all_shortest_search(const UnlabelledGraph& g, NodeId source,
                            const SolutionCallback& on_solution) {
    if (source >= g.node_count()) throw LookupError("unknown source node");

    PathDag dag;
    // entries are created in push order, so the FIFO queue is just a cursor
    // over the entry store
    std::vector<EntryId> visited(g.node_count(), UINT32_MAX);

    dag.entries.push_back({source, 0, 0, {}});
    visited[source] = 0;

    for (EntryId current = 0; current < dag.entries.size(); ++current) {
        NodeId node = dag.entries[current].node;
        uint32_t depth = dag.entries[current].depth;
        if (on_solution) on_solution(node, depth, current);

        for (NodeId succ : g.neighbours(node)) {
            EntryId seen = visited[succ];
            if (seen == UINT32_MAX) {
                visited[succ] = static_cast<EntryId>(dag.entries.size());
                dag.entries.push_back(
                    {succ, 0, depth + 1, {PrevRef{current, PrevRef::kNoLabel}}});
            } else if (dag.entries[seen].depth == depth + 1) {
                // another shortest path to succ
                dag.entries[seen].prev.push_back({current, PrevRef::kNoLabel});
            } else {
                // FIFO order: revisits can only be at depth <= depth + 1
                assert(dag.entries[seen].depth <= depth + 1);
            }
        }
    }
    return dag;
}

}  // namespace rpq
