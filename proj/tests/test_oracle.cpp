#include <doctest.h>

#include "rpq/oracle.hpp"
#include "test_util.hpp"

using namespace rpq;
using namespace rpq::oracle;

TEST_CASE("unlabelled oracle on figure 1") {
    UnlabelledGraph g = strip_labels(testutil::figure1());
    OracleResult result = brute_all_shortest_unlabelled(g, *g.nodes().find("v"));

    REQUIRE(result.size() == 6);
    const auto& n4 = result.at(*g.nodes().find("n4"));
    CHECK(n4.depth == 2);
    CHECK(n4.paths.size() == 3);
    const auto& n5 = result.at(*g.nodes().find("n5"));
    CHECK(n5.depth == 3);
    CHECK(n5.paths.size() == 3);
}

TEST_CASE("unlabelled oracle on a single node") {
    Interner nodes;
    nodes.intern("v");
    UnlabelledGraph g = UnlabelledGraph::from_edges(std::move(nodes), {});
    OracleResult result = brute_all_shortest_unlabelled(g, 0);
    REQUIRE(result.size() == 1);
    CHECK(result.at(0).depth == 0);
    CHECK(result.at(0).paths == std::set<Path>{Path{{0}, {}}});
}

TEST_CASE("unlabelled oracle on a two-node cycle") {
    UnlabelledGraph g = strip_labels(testutil::load_graph("v\te\tw\nw\te\tv\n"));
    NodeId v = *g.nodes().find("v");
    NodeId w = *g.nodes().find("w");
    OracleResult result = brute_all_shortest_unlabelled(g, v);
    CHECK(result.at(v).depth == 0);
    CHECK(result.at(w).depth == 1);
    CHECK(result.at(w).paths == std::set<Path>{Path{{v, w}, {}}});
}

TEST_CASE("size guards refuse oversized instances") {
    std::mt19937 rng(1);
    UnlabelledGraph big = testutil::random_unlabelled(rng, 17, 1);
    while (big.node_count() <= 16) big = testutil::random_unlabelled(rng, 17, 1);
    CHECK_THROWS_AS(brute_all_shortest_unlabelled(big, 0), SizeGuardError);

    LabelledGraph g = testutil::figure1();
    Rpq q = compile_rpq(g, "v", "e e e e e e e e e e e e e");  // 25-node AST
    CHECK_THROWS_AS(brute_all_shortest_rpq(g, q), SizeGuardError);

    CHECK_THROWS_AS(
        brute_regex_membership(*parse_regex("a*"),
                               std::vector<std::string>(9, "a")),
        SizeGuardError);
}

TEST_CASE("rpq oracle: two parallel labels give two shortest witnesses") {
    LabelledGraph g = testutil::load_graph("v\ta\tx\nv\tb\tx\n");
    Rpq q = compile_rpq(g, "v", "a|b");
    OracleResult result = brute_all_shortest_rpq(g, q);
    REQUIRE(result.size() == 1);
    const auto& x = result.at(*g.nodes().find("x"));
    CHECK(x.depth == 1);
    CHECK(x.paths.size() == 2);
}

TEST_CASE("rpq oracle: empty language gives no answers") {
    LabelledGraph g = testutil::figure1();
    // `a` does not label any edge of figure 1
    Rpq q = compile_rpq(g, "v", "a");
    CHECK(brute_all_shortest_rpq(g, q).empty());
}

TEST_CASE("rpq oracle: nullable regex answers the source with the empty path") {
    LabelledGraph g = testutil::figure1();
    Rpq q = compile_rpq(g, "v", "e?");
    OracleResult result = brute_all_shortest_rpq(g, q);
    NodeId v = *g.nodes().find("v");
    REQUIRE(result.count(v) == 1);
    CHECK(result.at(v).depth == 0);
    CHECK(result.at(v).paths == std::set<Path>{Path{{v}, {}}});
}

TEST_CASE("regex membership basics") {
    CHECK(brute_regex_membership(*parse_regex("(a|b)*"), {"a", "b", "b", "a"}));
    CHECK_FALSE(brute_regex_membership(*parse_regex("a b"), {"b", "a"}));
    CHECK(brute_regex_membership(*parse_regex("a+"), {"a", "a", "a"}));
    CHECK_FALSE(brute_regex_membership(*parse_regex("a+"), {}));
}

TEST_CASE("oracle outputs are internally consistent") {
    std::mt19937 rng(53);
    std::vector<std::string> alphabet{"a", "b", "c"};
    for (int i = 0; i < 60; ++i) {
        LabelledGraph g = testutil::random_labelled(rng, 8, 3, 20);
        NodeId source = std::uniform_int_distribution<NodeId>(0, g.node_count() - 1)(rng);
        Rpq q = compile_rpq(g, source, testutil::random_regex(rng, 6, alphabet));
        OracleResult result = brute_all_shortest_rpq(g, q);
        for (const auto& [node, entry] : result) {
            for (const Path& p : entry.paths) {
                CHECK(p.nodes.front() == q.source);
                CHECK(p.nodes.back() == node);
                CHECK(p.edge_labels.size() == entry.depth);
                std::vector<std::string> word;
                for (LabelId l : p.edge_labels) word.push_back(g.labels().name(l));
                if (word.size() <= 8) {
                    CHECK(oracle::brute_regex_membership(*q.ast, word));
                }
            }
        }
    }
}
