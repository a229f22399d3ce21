#include "rpq/engine.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace rpq {

namespace {

uint64_t product_key(const Rpq& q, NodeId node, uint32_t state) {
    return static_cast<uint64_t>(node) * q.dfa.state_count + state;
}

void check_source(const LabelledGraph& g, const Rpq& q) {
    if (q.source >= g.node_count()) throw LookupError("query source not in graph");
}

}  // namespace

Rpq compile_rpq(const LabelledGraph& g, NodeId source, RegexPtr ast) {
    if (source >= g.node_count()) throw LookupError("query source not in graph");
    Rpq q;
    q.source = source;
    q.accepts_empty = nullable(*ast);
    q.dfa = determinize(glushkov(*ast));
    q.ast = std::move(ast);
    q.label_map.assign(g.labels().size(), -1);
    for (LabelId l = 0; l < g.labels().size(); ++l) {
        if (auto id = q.dfa.alphabet.find(g.labels().name(l))) {
            q.label_map[l] = static_cast<int32_t>(*id);
        }
    }
    return q;
}

Rpq compile_rpq(const LabelledGraph& g, std::string_view source_name,
                std::string_view regex_text) {
    auto source = g.nodes().find(source_name);
    if (!source) {
        throw LookupError("source node '" + std::string(source_name) +
                          "' not in graph");
    }
    return compile_rpq(g, *source, parse_regex(regex_text));
}

std::vector<ProductArc> product_neighbours(const LabelledGraph& g, const Rpq& q,
                                           ProductState p) {
    std::vector<ProductArc> result;
    for (const Arc& arc : g.out(p.node)) {
        int32_t dfa_label = q.label_map[arc.label];
        if (dfa_label < 0) continue;
        int32_t next = q.dfa.next(p.state, static_cast<uint32_t>(dfa_label));
        if (next == Dfa::kNoState) continue;
        result.push_back({{arc.dst, static_cast<uint32_t>(next)}, arc.label});
    }
    return result;
}

bool AnswerPaths::for_each(const std::function<bool(const Path&)>& visit) const {
    Path path;
    for (EntryId target : entries_) {
        PathCursor cursor(*dag_, target);
        while (cursor.next(path)) {
            if (!visit(path)) return false;
        }
    }
    return true;
}

std::vector<Path> AnswerPaths::collect() const {
    std::vector<Path> result;
    for_each([&](const Path& p) {
        result.push_back(p);
        return true;
    });
    return result;
}

BigInt AnswerPaths::count() const {
    BigInt total = 0;
    for (EntryId target : entries_) total += count_paths(*dag_, target);
    return total;
}

PathDag eval_all_shortest(const LabelledGraph& g, const Rpq& q,
                          const AllShortestCallback& on_solution) {
    check_source(g, q);

    PathDag dag;
    std::unordered_map<uint64_t, EntryId> visited;
    dag.entries.push_back({q.source, q.dfa.initial, 0, {}});
    visited.emplace(product_key(q, q.source, q.dfa.initial), 0);

    struct Group {
        NodeId node;
        uint32_t depth;
        std::vector<EntryId> finals;
    };
    std::vector<Group> groups;
    std::unordered_map<NodeId, size_t> group_of;  // the answer dictionary
    size_t flushed = 0;

    auto flush_below = [&](uint32_t depth) {
        while (flushed < groups.size() && groups[flushed].depth < depth) {
            const Group& grp = groups[flushed];
            if (on_solution) {
                on_solution(grp.node, grp.depth, AnswerPaths(dag, grp.finals));
            }
            ++flushed;
        }
    };

    // entries are created in push order; the FIFO queue is a cursor
    for (EntryId current = 0; current < dag.entries.size(); ++current) {
        NodeId node = dag.entries[current].node;
        uint32_t state = dag.entries[current].state;
        uint32_t depth = dag.entries[current].depth;

        // entries of smaller depth can no longer gain final states, so their
        // answers are final and may be emitted early
        flush_below(depth);

        if (q.dfa.finals[state]) {
            auto it = group_of.find(node);
            if (it == group_of.end()) {
                group_of.emplace(node, groups.size());
                groups.push_back({node, depth, {current}});
            } else if (groups[it->second].depth == depth) {
                groups[it->second].finals.push_back(current);
            }
            // deeper arrival through another final state: suppressed
        }

        for (const ProductArc& arc : product_neighbours(g, q, {node, state})) {
            uint64_t key = product_key(q, arc.to.node, arc.to.state);
            auto [it, inserted] =
                visited.try_emplace(key, static_cast<EntryId>(dag.entries.size()));
            if (inserted) {
                dag.entries.push_back(
                    {arc.to.node, arc.to.state, depth + 1,
                     {PrevRef{current, static_cast<int32_t>(arc.label)}}});
            } else if (dag.entries[it->second].depth == depth + 1) {
                dag.entries[it->second].prev.push_back(
                    {current, static_cast<int32_t>(arc.label)});
            } else {
                assert(dag.entries[it->second].depth <= depth + 1);
            }
        }
    }
    flush_below(UINT32_MAX);
    return dag;
}

void eval_count(const LabelledGraph& g, const Rpq& q,
                const CountCallback& on_solution) {
    check_source(g, q);

    struct CountEntry {
        NodeId node;
        uint32_t state;
        uint32_t depth;
        BigInt num_paths;
    };
    std::vector<CountEntry> entries;
    std::unordered_map<uint64_t, EntryId> visited;
    entries.push_back({q.source, q.dfa.initial, 0, 1});  // one empty path
    visited.emplace(product_key(q, q.source, q.dfa.initial), 0);

    struct Group {
        NodeId node;
        uint32_t depth;
        BigInt count;
    };
    std::vector<Group> groups;
    std::unordered_map<NodeId, size_t> group_of;
    size_t flushed = 0;

    auto flush_below = [&](uint32_t depth) {
        while (flushed < groups.size() && groups[flushed].depth < depth) {
            const Group& grp = groups[flushed];
            if (on_solution) on_solution(grp.node, grp.depth, grp.count);
            ++flushed;
        }
    };

    for (EntryId current = 0; current < entries.size(); ++current) {
        NodeId node = entries[current].node;
        uint32_t state = entries[current].state;
        uint32_t depth = entries[current].depth;
        flush_below(depth);

        if (q.dfa.finals[state]) {
            auto it = group_of.find(node);
            if (it == group_of.end()) {
                group_of.emplace(node, groups.size());
                groups.push_back({node, depth, entries[current].num_paths});
            } else if (groups[it->second].depth == depth) {
                groups[it->second].count += entries[current].num_paths;
            }
        }

        for (const ProductArc& arc : product_neighbours(g, q, {node, state})) {
            uint64_t key = product_key(q, arc.to.node, arc.to.state);
            auto [it, inserted] =
                visited.try_emplace(key, static_cast<EntryId>(entries.size()));
            if (inserted) {
                entries.push_back({arc.to.node, arc.to.state, depth + 1,
                                   entries[current].num_paths});
            } else if (entries[it->second].depth == depth + 1) {
                entries[it->second].num_paths += entries[current].num_paths;
            } else {
                assert(entries[it->second].depth <= depth + 1);
            }
        }
    }
    flush_below(UINT32_MAX);
}

void eval_single_path(const LabelledGraph& g, const Rpq& q,
                      const SinglePathCallback& on_solution) {
    check_source(g, q);

    struct SingleEntry {
        NodeId node;
        uint32_t state;
        uint32_t depth;
        EntryId prev;    // UINT32_MAX for the start entry
        LabelId label;   // edge label used from prev
    };
    std::vector<SingleEntry> entries;
    std::unordered_map<uint64_t, EntryId> visited;
    std::unordered_map<NodeId, uint32_t> answered;  // node -> answer depth

    entries.push_back({q.source, q.dfa.initial, 0, UINT32_MAX, 0});
    visited.emplace(product_key(q, q.source, q.dfa.initial), 0);

    for (EntryId current = 0; current < entries.size(); ++current) {
        const SingleEntry entry = entries[current];
        if (q.dfa.finals[entry.state] &&
            answered.try_emplace(entry.node, entry.depth).second) {
            Path path;
            for (EntryId e = current; e != UINT32_MAX; e = entries[e].prev) {
                path.nodes.push_back(entries[e].node);
                if (entries[e].prev != UINT32_MAX) {
                    path.edge_labels.push_back(entries[e].label);
                }
            }
            std::reverse(path.nodes.begin(), path.nodes.end());
            std::reverse(path.edge_labels.begin(), path.edge_labels.end());
            if (on_solution) on_solution(entry.node, path);
        }

        for (const ProductArc& arc :
             product_neighbours(g, q, {entry.node, entry.state})) {
            uint64_t key = product_key(q, arc.to.node, arc.to.state);
            if (visited.try_emplace(key, static_cast<EntryId>(entries.size())).second) {
                entries.push_back(
                    {arc.to.node, arc.to.state, entry.depth + 1, current, arc.label});
            }
        }
    }
}

std::vector<NodeId> eval_reach(const LabelledGraph& g, const Rpq& q) {
    std::vector<NodeId> answers;
    eval_single_path(g, q,
                     [&](NodeId node, const Path&) { answers.push_back(node); });
    return answers;
}

}  // namespace rpq
