#ifndef RPQ_ENUMERATE_HPP
#define RPQ_ENUMERATE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "rpq/dag.hpp"

namespace rpq {

using BigInt = boost::multiprecision::cpp_int;

// Resumable depth-first decoder of all shortest paths from the DAG root to a
// target entry. Backtracking only revisits positions that can still fork, so
// the work between consecutive yields stays linear in the size of the yielded
// path. The DAG must not change while a cursor is live; any number of cursors
// may read the same DAG.
class PathCursor {
public:
    PathCursor(const PathDag& dag, EntryId target);

    // Writes the next path into `out` (root first) and returns true, or
    // returns false when the enumeration is exhausted.
    bool next(Path& out);

    // Basic operations performed so far (stack pushes/pops plus nodes copied
    // out); used by the delay instrumentation.
    uint64_t steps() const { return steps_; }

private:
    struct Frame {
        EntryId entry;
        size_t pos;  // index into entry's prevList used to reach the frame below
    };

    void descend(EntryId entry);
    void emit(Path& out);

    const PathDag* dag_;
    std::vector<Frame> stack_;  // target at the bottom, root on top
    bool started_ = false;
    bool done_ = false;
    uint64_t steps_ = 0;
};

// Number of root-to-target paths, by memoized DP over prevLists; linear in
// entries plus references.
BigInt count_paths(const PathDag& dag, EntryId target);

// Convenience: drain a cursor (test helper).
std::vector<Path> enumerate_paths(const PathDag& dag, EntryId target);

}  // namespace rpq

#endif
