#include <doctest.h>

#include <random>

#include "rpq/automaton.hpp"
#include "rpq/oracle.hpp"
#include "rpq/regex.hpp"
#include "test_util.hpp"

using namespace rpq;

namespace {

// all words up to max_len over the alphabet, shortest first
std::vector<std::vector<std::string>> all_words(const std::vector<std::string>& alphabet,
                                                size_t max_len) {
    std::vector<std::vector<std::string>> words{{}};
    size_t level_start = 0;
    for (size_t len = 1; len <= max_len; ++len) {
        size_t level_end = words.size();
        for (size_t i = level_start; i < level_end; ++i) {
            for (const auto& symbol : alphabet) {
                auto w = words[i];
                w.push_back(symbol);
                words.push_back(std::move(w));
            }
        }
        level_start = level_end;
    }
    return words;
}

}  // namespace

TEST_CASE("precedence: concatenation binds tighter than alternation") {
    RegexPtr ast = parse_regex("a b | c");
    auto expected = RegexAst::alt(
        RegexAst::concat(RegexAst::sym("a"), RegexAst::sym("b")), RegexAst::sym("c"));
    CHECK(*ast == *expected);
}

TEST_CASE("postfix binds tighter than concatenation") {
    CHECK(*parse_regex("(a|b)*") ==
          *RegexAst::star(RegexAst::alt(RegexAst::sym("a"), RegexAst::sym("b"))));
    CHECK(*parse_regex("a b*") ==
          *RegexAst::concat(RegexAst::sym("a"), RegexAst::star(RegexAst::sym("b"))));
}

TEST_CASE("explicit dot concatenation and back-quoted symbols") {
    CHECK(*parse_regex("a.b") ==
          *RegexAst::concat(RegexAst::sym("a"), RegexAst::sym("b")));
    CHECK(*parse_regex("`knows of`*") ==
          *RegexAst::star(RegexAst::sym("knows of")));
}

TEST_CASE("() is the epsilon literal") {
    CHECK(parse_regex("()")->kind == RegexKind::Epsilon);
    CHECK(*parse_regex("a|()") ==
          *RegexAst::alt(RegexAst::sym("a"), RegexAst::epsilon()));
}

TEST_CASE("a** parses as nested stars with the same language as a*") {
    RegexPtr nested = parse_regex("a**");
    CHECK(*nested == *RegexAst::star(RegexAst::star(RegexAst::sym("a"))));

    RegexPtr flat = parse_regex("a*");
    for (const auto& word : all_words({"a"}, 5)) {
        CHECK(oracle::brute_regex_membership(*nested, word) ==
              oracle::brute_regex_membership(*flat, word));
    }
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_regex("(a|b"), ParseError);
    CHECK_THROWS_AS(parse_regex("*a"), ParseError);
    CHECK_THROWS_AS(parse_regex("a|"), ParseError);
    CHECK_THROWS_AS(parse_regex("a||b"), ParseError);
    CHECK_THROWS_AS(parse_regex(""), ParseError);
    CHECK_THROWS_AS(parse_regex("a b)"), ParseError);

    try {
        parse_regex("a|");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("nullable") {
    CHECK(nullable(*parse_regex("a*")));
    CHECK(nullable(*parse_regex("()")));
    CHECK_FALSE(nullable(*parse_regex("a")));
    CHECK_FALSE(nullable(*parse_regex("a+ b")));
    CHECK(nullable(*parse_regex("a? b*")));
    CHECK(nullable(*parse_regex("(a b)*|c")));
}

TEST_CASE("nullable agrees with automaton acceptance of the empty word") {
    std::mt19937 rng(23);
    std::vector<std::string> alphabet{"a", "b", "c"};
    for (int i = 0; i < 200; ++i) {
        RegexPtr ast = testutil::random_regex(rng, 8, alphabet);
        Dfa dfa = determinize(glushkov(*ast));
        CHECK(nullable(*ast) == accepts(dfa, {}));
    }
}

TEST_CASE("printer/parser round trip") {
    std::mt19937 rng(29);
    std::vector<std::string> alphabet{"a", "b", "knows of"};
    for (int i = 0; i < 200; ++i) {
        RegexPtr ast = testutil::random_regex(rng, 10, alphabet);
        RegexPtr reparsed = parse_regex(to_string(*ast));
        CHECK(*ast == *reparsed);
    }
}
