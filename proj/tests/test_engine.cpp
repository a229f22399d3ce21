#include <doctest.h>

#include <random>
#include <set>

#include "rpq/allsp.hpp"
#include "rpq/engine.hpp"
#include "test_util.hpp"

using namespace rpq;

TEST_CASE("product_neighbours follows matching graph and automaton transitions") {
    LabelledGraph g = testutil::load_graph("v\ta\tx\nv\ta\ty\nv\tb\tz\n");
    NodeId v = *g.nodes().find("v");

    SUBCASE("single matching edge") {
        LabelledGraph tiny = testutil::load_graph("v\ta\tx\n");
        Rpq q = compile_rpq(tiny, "v", "a");
        auto arcs = product_neighbours(tiny, q, {*tiny.nodes().find("v"), q.dfa.initial});
        REQUIRE(arcs.size() == 1);
        CHECK(arcs[0].to.node == *tiny.nodes().find("x"));
        CHECK(q.dfa.finals[arcs[0].to.state]);
        CHECK(tiny.labels().name(arcs[0].label) == "a");
    }
    SUBCASE("regex a filters out the b edge") {
        Rpq q = compile_rpq(g, v, parse_regex("a"));
        auto arcs = product_neighbours(g, q, {v, q.dfa.initial});
        REQUIRE(arcs.size() == 2);
        CHECK(g.nodes().name(arcs[0].to.node) == "x");
        CHECK(g.nodes().name(arcs[1].to.node) == "y");
    }
    SUBCASE("disjoint labels yield nothing") {
        Rpq q = compile_rpq(g, v, parse_regex("c"));
        CHECK(product_neighbours(g, q, {v, q.dfa.initial}).empty());
    }
}

TEST_CASE("eval_reach") {
    SUBCASE("a* closure") {
        LabelledGraph g = testutil::load_graph("v\ta\tx\nx\ta\ty\n");
        Rpq q = compile_rpq(g, "v", "a*");
        auto reach = eval_reach(g, q);
        std::set<std::string> names;
        for (NodeId n : reach) names.insert(g.nodes().name(n));
        CHECK(names == std::set<std::string>{"v", "x", "y"});
    }
    SUBCASE("no matching edges") {
        LabelledGraph g = testutil::load_graph("v\tb\tx\n");
        CHECK(eval_reach(g, compile_rpq(g, "v", "a")).empty());
    }
}

TEST_CASE("eval_single_path") {
    SUBCASE("figure 1 with e e e picks the witness through n1") {
        LabelledGraph g = testutil::figure1();
        Rpq q = compile_rpq(g, "v", "e e e");
        std::vector<std::pair<std::string, std::string>> emitted;
        eval_single_path(g, q, [&](NodeId node, const Path& path) {
            emitted.emplace_back(g.nodes().name(node), format_path(path, g));
        });
        REQUIRE(emitted.size() == 1);
        CHECK(emitted[0].first == "n5");
        CHECK(emitted[0].second == "v -e-> n1 -e-> n4 -e-> n5");
    }
    SUBCASE("nullable regex emits the empty path first") {
        LabelledGraph g = testutil::figure1();
        std::vector<std::pair<std::string, size_t>> emitted;
        eval_single_path(g, compile_rpq(g, "v", "e*"),
                         [&](NodeId node, const Path& path) {
                             emitted.emplace_back(g.nodes().name(node),
                                                  path.edge_labels.size());
                         });
        REQUIRE(!emitted.empty());
        CHECK(emitted.front() == std::pair<std::string, size_t>{"v", 0});
        // nondecreasing path length
        for (size_t i = 1; i < emitted.size(); ++i) {
            CHECK(emitted[i].second >= emitted[i - 1].second);
        }
    }
    SUBCASE("single edge") {
        LabelledGraph g = testutil::load_graph("v\ta\tx\n");
        std::vector<std::string> lines;
        eval_single_path(g, compile_rpq(g, "v", "a"),
                         [&](NodeId, const Path& path) {
                             lines.push_back(format_path(path, g));
                         });
        CHECK(lines == std::vector<std::string>{"v -a-> x"});
    }
}

TEST_CASE("eval_all_shortest") {
    SUBCASE("figure 1 with e*") {
        LabelledGraph g = testutil::figure1();
        auto answers = testutil::run_all_modes(g, compile_rpq(g, "v", "e*"));
        CHECK(answers.all.size() == 6);
        CHECK(answers.all.at(*g.nodes().find("v")).second.size() == 1);
        CHECK(answers.all.at(*g.nodes().find("n4")).second.size() == 3);
        CHECK(answers.all.at(*g.nodes().find("n4")).first == 2);
        CHECK(answers.all.at(*g.nodes().find("n5")).second.size() == 3);
        CHECK_FALSE(answers.duplicate_path);
    }
    SUBCASE("two parallel labels, regex a|b") {
        LabelledGraph g = testutil::load_graph("v\ta\tx\nv\tb\tx\n");
        auto answers = testutil::run_all_modes(g, compile_rpq(g, "v", "a|b"));
        const auto& [depth, paths] = answers.all.at(*g.nodes().find("x"));
        CHECK(depth == 1);
        CHECK(paths.size() == 2);
    }
    SUBCASE("longer match through a different final state is suppressed") {
        LabelledGraph g = testutil::load_graph("v\ta\tx\nx\tb\ty\nv\tb\ty\n");
        auto answers = testutil::run_all_modes(g, compile_rpq(g, "v", "(a b)|b"));
        NodeId y = *g.nodes().find("y");
        const auto& [depth, paths] = answers.all.at(y);
        CHECK(depth == 1);
        REQUIRE(paths.size() == 1);
        CHECK(format_path(*paths.begin(), g) == "v -b-> y");
    }
}

TEST_CASE("eval_count") {
    SUBCASE("figure 1 with e*") {
        LabelledGraph g = testutil::figure1();
        auto answers = testutil::run_all_modes(g, compile_rpq(g, "v", "e*"));
        CHECK(answers.counts.at(*g.nodes().find("n4")) ==
              std::pair<uint32_t, BigInt>{2, 3});
        CHECK(answers.counts.at(*g.nodes().find("n5")) ==
              std::pair<uint32_t, BigInt>{3, 3});
    }
    SUBCASE("nullable regex counts the empty path once") {
        LabelledGraph g = testutil::figure1();
        std::vector<std::tuple<std::string, uint32_t, BigInt>> emitted;
        eval_count(g, compile_rpq(g, "v", "e*"),
                   [&](NodeId node, uint32_t depth, const BigInt& count) {
                       emitted.emplace_back(g.nodes().name(node), depth, count);
                   });
        REQUIRE(!emitted.empty());
        CHECK(emitted.front() == std::tuple<std::string, uint32_t, BigInt>{"v", 0, 1});
    }
    SUBCASE("k-diamond chain doubles the count per stage") {
        LabelledGraph g = testutil::diamond_chain(8);
        auto answers = testutil::run_all_modes(g, compile_rpq(g, "d0", "e*"));
        CHECK(answers.counts.at(*g.nodes().find("d8")).second == 256);
    }
}

TEST_CASE("source not in graph is a lookup error") {
    LabelledGraph g = testutil::figure1();
    CHECK_THROWS_AS(compile_rpq(g, "missing", "e"), LookupError);
}

TEST_CASE("all modes agree with each other and the oracle on random instances") {
    std::mt19937 rng(59);
    std::vector<std::string> alphabet{"a", "b", "c"};
    for (int i = 0; i < 150; ++i) {
        LabelledGraph g = testutil::random_labelled(rng, 10, 3, 25);
        NodeId source = std::uniform_int_distribution<NodeId>(0, g.node_count() - 1)(rng);
        Rpq q = compile_rpq(g, source, testutil::random_regex(rng, 8, alphabet));
        std::string diagnosis = testutil::check_against_oracle(g, q);
        CHECK_MESSAGE(diagnosis.empty(), diagnosis);
    }
}

TEST_CASE("with a dummy label and dummy* the product search reproduces plain BFS") {
    std::mt19937 rng(61);
    for (int i = 0; i < 50; ++i) {
        LabelledGraph g = testutil::random_labelled(rng, 10, 1, 25);
        NodeId source = std::uniform_int_distribution<NodeId>(0, g.node_count() - 1)(rng);

        UnlabelledGraph u = strip_labels(g);
        PathDag plain = all_shortest_search(u, source);
        std::map<NodeId, std::pair<uint32_t, size_t>> plain_result;
        for (const auto& e : plain.entries) {
            EntryId id = EntryId(&e - plain.entries.data());
            plain_result[e.node] = {e.depth, enumerate_paths(plain, id).size()};
        }

        std::string regex = g.labels().size() == 1
                                ? g.labels().name(0) + "*"
                                : "a*";
        auto answers = testutil::run_all_modes(g, compile_rpq(g, source, parse_regex(regex)));
        REQUIRE(answers.all.size() == plain_result.size());
        for (const auto& [node, slot] : answers.all) {
            CHECK(slot.first == plain_result.at(node).first);
            CHECK(slot.second.size() == plain_result.at(node).second);
        }
    }
}

TEST_CASE("count equals enumerated path count per answer") {
    std::mt19937 rng(67);
    std::vector<std::string> alphabet{"a", "b"};
    for (int i = 0; i < 80; ++i) {
        LabelledGraph g = testutil::random_labelled(rng, 9, 2, 22);
        NodeId source = std::uniform_int_distribution<NodeId>(0, g.node_count() - 1)(rng);
        auto answers = testutil::run_all_modes(
            g, compile_rpq(g, source, testutil::random_regex(rng, 7, alphabet)));
        REQUIRE(answers.all.size() == answers.counts.size());
        for (const auto& [node, slot] : answers.all) {
            CHECK(BigInt(slot.second.size()) == answers.counts.at(node).second);
        }
    }
}
