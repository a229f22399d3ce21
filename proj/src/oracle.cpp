#include "rpq/oracle.hpp"

namespace rpq {
namespace oracle {

namespace {

// A level list can still blow up on dense instances; refuse instead of
// hanging the suite.
constexpr size_t kMaxLevelPaths = 2'000'000;

}  // namespace

OracleResult brute_all_shortest_unlabelled(const UnlabelledGraph& g, NodeId source) {
    if (g.node_count() > 16) {
        throw SizeGuardError("brute_all_shortest_unlabelled: |V| > 16");
    }
    if (source >= g.node_count()) throw LookupError("unknown source node");

    OracleResult result;
    std::vector<int64_t> min_depth(g.node_count(), -1);

    std::vector<Path> level{Path{{source}, {}}};
    min_depth[source] = 0;
    result[source] = {0, {level.front()}};

    for (uint32_t depth = 0; !level.empty(); ++depth) {
        std::vector<Path> next;
        for (const Path& path : level) {
            NodeId end = path.nodes.back();
            for (NodeId succ : g.neighbours(end)) {
                // only shortest prefixes can extend to shortest paths
                if (min_depth[succ] == -1) {
                    min_depth[succ] = depth + 1;
                    result[succ].depth = depth + 1;
                } else if (min_depth[succ] != depth + 1) {
                    continue;
                }
                Path extended = path;
                extended.nodes.push_back(succ);
                result[succ].paths.insert(extended);
                next.push_back(std::move(extended));
                if (next.size() > kMaxLevelPaths) {
                    throw SizeGuardError("brute_all_shortest_unlabelled: path blow-up");
                }
            }
        }
        level = std::move(next);
    }
    return result;
}

OracleResult brute_all_shortest_rpq(const LabelledGraph& g, const Rpq& q) {
    if (g.node_count() > 12) throw SizeGuardError("brute_all_shortest_rpq: |V| > 12");
    if (q.ast && q.ast->size() > 12) {
        throw SizeGuardError("brute_all_shortest_rpq: regex too large");
    }
    if (q.source >= g.node_count()) throw LookupError("unknown source node");

    OracleResult result;
    const uint32_t states = q.dfa.state_count;
    std::vector<int64_t> min_depth(static_cast<size_t>(g.node_count()) * states, -1);
    auto pair_depth = [&](NodeId n, uint32_t s) -> int64_t& {
        return min_depth[static_cast<size_t>(n) * states + s];
    };

    struct Candidate {
        Path path;
        uint32_t state;
    };

    auto record = [&](NodeId node, uint32_t state, uint32_t depth, const Path& path) {
        if (!q.dfa.finals[state]) return;
        auto it = result.find(node);
        if (it == result.end()) {
            result[node] = {depth, {path}};
        } else if (it->second.depth == depth) {
            it->second.paths.insert(path);
        }
        // levels run in increasing length, so depth > recorded means longer
    };

    std::vector<Candidate> level{{Path{{q.source}, {}}, q.dfa.initial}};
    pair_depth(q.source, q.dfa.initial) = 0;
    record(q.source, q.dfa.initial, 0, level.front().path);

    const uint32_t max_depth = g.node_count() * states;
    for (uint32_t depth = 0; depth < max_depth && !level.empty(); ++depth) {
        std::vector<Candidate> next;
        for (const Candidate& cand : level) {
            NodeId end = cand.path.nodes.back();
            for (const Arc& arc : g.out(end)) {
                int32_t dfa_label = q.label_map[arc.label];
                if (dfa_label < 0) continue;
                int32_t ns = q.dfa.next(cand.state, static_cast<uint32_t>(dfa_label));
                if (ns == Dfa::kNoState) continue;
                int64_t& best = pair_depth(arc.dst, static_cast<uint32_t>(ns));
                if (best == -1) {
                    best = depth + 1;
                } else if (best != depth + 1) {
                    continue;
                }
                Candidate extended{cand.path, static_cast<uint32_t>(ns)};
                extended.path.nodes.push_back(arc.dst);
                extended.path.edge_labels.push_back(arc.label);
                record(arc.dst, extended.state, depth + 1, extended.path);
                next.push_back(std::move(extended));
                if (next.size() > kMaxLevelPaths) {
                    throw SizeGuardError("brute_all_shortest_rpq: path blow-up");
                }
            }
        }
        level = std::move(next);
    }
    return result;
}

namespace {

bool match(const RegexAst& ast, const std::vector<std::string>& word, size_t lo,
           size_t hi);

bool match_star(const RegexAst& child, const std::vector<std::string>& word,
                size_t lo, size_t hi) {
    if (lo == hi) return true;
    for (size_t mid = lo + 1; mid <= hi; ++mid) {  // nonempty first chunk
        if (match(child, word, lo, mid) && match_star(child, word, mid, hi)) {
            return true;
        }
    }
    return false;
}

bool match(const RegexAst& ast, const std::vector<std::string>& word, size_t lo,
           size_t hi) {
    switch (ast.kind) {
        case RegexKind::Symbol:
            return hi == lo + 1 && word[lo] == ast.symbol;
        case RegexKind::Epsilon:
            return lo == hi;
        case RegexKind::Concat:
            for (size_t mid = lo; mid <= hi; ++mid) {
                if (match(*ast.left, word, lo, mid) &&
                    match(*ast.right, word, mid, hi)) {
                    return true;
                }
            }
            return false;
        case RegexKind::Union:
            return match(*ast.left, word, lo, hi) || match(*ast.right, word, lo, hi);
        case RegexKind::Star:
            return match_star(*ast.left, word, lo, hi);
        case RegexKind::Plus:
            for (size_t mid = lo; mid <= hi; ++mid) {
                if (match(*ast.left, word, lo, mid) &&
                    match_star(*ast.left, word, mid, hi)) {
                    return true;
                }
            }
            return false;
        case RegexKind::Optional:
            return lo == hi || match(*ast.left, word, lo, hi);
    }
    return false;
}

}  // namespace

bool brute_regex_membership(const RegexAst& ast,
                            const std::vector<std::string>& word) {
    if (word.size() > 8) throw SizeGuardError("brute_regex_membership: |word| > 8");
    return match(ast, word, 0, word.size());
}

}  // namespace oracle
}  // namespace rpq
