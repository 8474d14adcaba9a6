#include <doctest.h>

#include <map>
#include <set>
#include <tuple>

#include "wordeq/match.hpp"

using namespace wordeq;

namespace {

// Matcher results as comparable triples (assignment map, prefix, suffix).
using Triple = std::tuple<std::map<Variable, Word>, Word, Word>;

Triple as_triple(const MatchSolution& s) {
    return {s.sigma.entries(), s.prefix, s.suffix};
}

std::set<Triple> as_set(const std::vector<MatchSolution>& v) {
    std::set<Triple> out;
    for (const auto& s : v) out.insert(as_triple(s));
    return out;
}

}  // namespace

TEST_CASE("single-variable pattern: every split of the target") {
    const auto sols = match_pattern(parse_word("x"), parse_word("a b"));
    REQUIRE(sols.size() == 6);
    // Lexicographic by split positions: prefix end first, then image end.
    const Word a = parse_word("a"), b = parse_word("b"), ab = parse_word("a b");
    CHECK(as_triple(sols[0]) == Triple{{{Variable("x"), Word{}}}, Word{}, ab});
    CHECK(as_triple(sols[1]) == Triple{{{Variable("x"), a}}, Word{}, b});
    CHECK(as_triple(sols[2]) == Triple{{{Variable("x"), ab}}, Word{}, Word{}});
    CHECK(as_triple(sols[3]) == Triple{{{Variable("x"), Word{}}}, a, b});
    CHECK(as_triple(sols[4]) == Triple{{{Variable("x"), b}}, a, Word{}});
    CHECK(as_triple(sols[5]) == Triple{{{Variable("x"), Word{}}}, ab, Word{}});
}

TEST_CASE("two variables on one letter") {
    CHECK(match_pattern(parse_word("x y"), parse_word("a")).size() == 4);
}

TEST_CASE("repeated variable must take a consistent image") {
    const auto sols = match_pattern(parse_word("x x"), parse_word("a a"));
    CHECK(sols.size() == 4);
    for (const auto& s : sols) {
        const Word img = s.sigma.get(Variable("x"));
        CHECK(s.prefix * img * img * s.suffix == parse_word("a a"));
    }
    CHECK(match_pattern(parse_word("x x"), parse_word("a b")).empty() == false);
    // Only empty images fit a b: three positions for the empty occurrence.
    for (const auto& s : match_pattern(parse_word("x x"), parse_word("a b")))
        CHECK(s.sigma.get(Variable("x")).empty());
}

TEST_CASE("allow_empty = false restricts to nonempty images") {
    const auto sols = match_pattern(parse_word("x"), parse_word("a b"), false);
    REQUIRE(sols.size() == 3);
    CHECK(sols[0].sigma.get(Variable("x")) == parse_word("a"));
    CHECK(sols[1].sigma.get(Variable("x")) == parse_word("a b"));
    CHECK(sols[2].sigma.get(Variable("x")) == parse_word("b"));
}

TEST_CASE("assignments are defined on exactly the pattern's variables") {
    for (const auto& s : match_pattern(parse_word("x t x"), parse_word("a b a b a"))) {
        CHECK(s.sigma.entries().size() == 2);
        CHECK(s.sigma.bound(Variable("x")));
        CHECK(s.sigma.bound(Variable("t")));
    }
}

TEST_CASE("no duplicate solutions even with repeated variables") {
    const auto sols = match_pattern(parse_word("x y x"), parse_word("a a a a"));
    CHECK(as_set(sols).size() == sols.size());
}

TEST_CASE("substitution application") {
    Substitution sigma;
    sigma.set(Variable("x"), parse_word("a b"));
    sigma.set(Variable("t"), Word{});
    CHECK(sigma.apply(parse_word("x t x")) == parse_word("a b a b"));
    CHECK(sigma.apply(Word{}).empty());
    sigma.unset(Variable("t"));
    CHECK(!sigma.bound(Variable("t")));
}

TEST_CASE("pattern longer than target cannot match nontrivially") {
    const auto sols = match_pattern(parse_word("x y"), Word{});
    REQUIRE(sols.size() == 1);  // everything empty
    CHECK(sols[0].sigma.get(Variable("x")).empty());
    CHECK(match_pattern(parse_word("x y"), Word{}, false).empty());
}
