#ifndef RPQ_ORACLE_HPP
#define RPQ_ORACLE_HPP

#include <map>
#include <set>
#include <vector>

#include "rpq/engine.hpp"
#include "rpq/graph.hpp"
#include "rpq/regex.hpp"

namespace rpq {
namespace oracle {

// Brute-force references for the engine, built on explicit path lists rather
// than prevList DAGs. Exponential in the worst case; guarded by hard size
// limits so misuse fails fast.

struct OracleEntry {
    uint32_t depth = 0;
    std::set<Path> paths;
};

using OracleResult = std::map<NodeId, OracleEntry>;

class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All shortest paths from source, by level-synchronous expansion of explicit
// path lists. Requires |V| <= 16.
OracleResult brute_all_shortest_unlabelled(const UnlabelledGraph& g, NodeId source);

// All shortest accepted paths per answer node, by exhaustive labelled-path
// expansion up to the |V| * |Q| product-diameter bound. Requires |V| <= 12
// and regex AST size <= 12.
OracleResult brute_all_shortest_rpq(const LabelledGraph& g, const Rpq& q);

// Structural-recursion membership test; word length <= 8.
bool brute_regex_membership(const RegexAst& ast,
                            const std::vector<std::string>& word);

}  // namespace oracle
}  // namespace rpq

#endif
