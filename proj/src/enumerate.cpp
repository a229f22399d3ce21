#include "rpq/enumerate.hpp"

namespace rpq {

PathCursor::PathCursor(const PathDag& dag, EntryId target) : dag_(&dag) {
    if (target >= dag.entries.size()) throw LookupError("unknown DAG entry");
    stack_.reserve(16);
    stack_.push_back({target, 0});  // descended lazily on first next()
}

void PathCursor::descend(EntryId entry) {
    for (;;) {
        const DagEntry& e = dag_->entries[entry];
        if (e.prev.empty()) break;  // root
        stack_.push_back({e.prev.front().entry, 0});
        ++steps_;
        entry = e.prev.front().entry;
    }
}

void PathCursor::emit(Path& out) {
    out.nodes.clear();
    out.edge_labels.clear();
    size_t n = stack_.size();
    out.nodes.push_back(dag_->entries[stack_[n - 1].entry].node);
    ++steps_;
    for (size_t k = n - 1; k-- > 0;) {
        const DagEntry& e = dag_->entries[stack_[k].entry];
        out.nodes.push_back(e.node);
        int32_t label = e.prev[stack_[k].pos].label;
        if (label != PrevRef::kNoLabel) {
            out.edge_labels.push_back(static_cast<LabelId>(label));
        }
        ++steps_;
    }
}

bool PathCursor::next(Path& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        descend(stack_.front().entry);
        emit(out);
        return true;
    }
    // Backtrack to the deepest frame that can still fork, then dive back to
    // the root through the next prevList position.
    stack_.pop_back();
    ++steps_;
    while (!stack_.empty()) {
        Frame& f = stack_.back();
        const DagEntry& e = dag_->entries[f.entry];
        if (f.pos + 1 < e.prev.size()) {
            ++f.pos;
            EntryId pred = e.prev[f.pos].entry;
            stack_.push_back({pred, 0});
            ++steps_;
            descend(pred);
            emit(out);
            return true;
        }
        stack_.pop_back();
        ++steps_;
    }
    done_ = true;
    return false;
}

BigInt count_paths(const PathDag& dag, EntryId target) {
    if (target >= dag.entries.size()) throw LookupError("unknown DAG entry");
    // prevList references always point to earlier entries, so a single pass
    // in creation order is a valid topological order
    std::vector<BigInt> counts(static_cast<size_t>(target) + 1);
    counts[dag.root] = 1;
    for (EntryId i = 0; i <= target; ++i) {
        if (i == dag.root) continue;
        BigInt total = 0;
        for (const PrevRef& p : dag.entries[i].prev) total += counts[p.entry];
        counts[i] = std::move(total);
    }
    return counts[target];
}

std::vector<Path> enumerate_paths(const PathDag& dag, EntryId target) {
    std::vector<Path> result;
    PathCursor cursor(dag, target);
    Path path;
    while (cursor.next(path)) result.push_back(path);
    return result;
}

}  // namespace rpq
