#ifndef RPQ_DAG_HPP
#define RPQ_DAG_HPP

#include <cstdint>
#include <vector>

#include "rpq/graph.hpp"

namespace rpq {

using EntryId = uint32_t;

// Backward pointer to the predecessor entry on some shortest path; `label` is
// the edge label used to reach this entry from that predecessor, or kNoLabel
// for unlabelled searches.
struct PrevRef {
    EntryId entry;
    int32_t label;

    static constexpr int32_t kNoLabel = -1;
};

// One Visited record: a (node [, automaton state], depth, prevList) tuple.
// prev is append-only and ordered by discovery; it is empty exactly for the
// root entry.
struct DagEntry {
    NodeId node;
    uint32_t state;  // 0 for unlabelled searches
    uint32_t depth;
    std::vector<PrevRef> prev;
};

// The Visited store read as a DAG rooted at the source entry. Entries are
// stored in creation order, which is also BFS pop order.
struct PathDag {
    std::vector<DagEntry> entries;
    EntryId root = 0;
};

struct DagStats {
    size_t entry_count = 0;
    size_t reference_count = 0;
};

DagStats dag_stats(const PathDag& dag);

}  // namespace rpq

#endif
