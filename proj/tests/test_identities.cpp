#include <doctest.h>

#include "wordeq/identities.hpp"

using namespace wordeq;

TEST_CASE("identity parsing and formatting") {
    const Identity id = parse_identity("x^2 t = t x^2");
    CHECK(id.lhs == parse_word("x x t"));
    CHECK(id.rhs == parse_word("t x x"));
    CHECK(format_identity(id) == "x^2 t = t x^2");

    CHECK(parse_identity("x = 1").rhs.empty());
    CHECK_THROWS_AS(parse_identity("x y"), ParseError);
    CHECK_THROWS_AS(parse_identity("x = y = z"), ParseError);
    CHECK_THROWS_AS(parse_identity("= x"), ParseError);
}

TEST_CASE("trivial identities and variable collection") {
    CHECK(parse_identity("x y = x y").trivial());
    CHECK(!parse_identity("x y = y x").trivial());
    const auto vars = parse_identity("x t1 = t2 x").variables();
    REQUIRE(vars.size() == 3);
    CHECK(vars[0] == Variable("x"));  // first occurrence, lhs first
    CHECK(vars[1] == Variable("t1"));
    CHECK(vars[2] == Variable("t2"));
}

TEST_CASE("joint alpha renaming uses one substitution for both sides") {
    const Identity a = alpha_canonical(parse_identity("y x = x y"));
    CHECK(format_identity(a) == "v1 v2 = v2 v1");
    CHECK(alpha_canonical(parse_identity("a b = b a")) == a);
    // A variable first seen on the rhs still gets a consistent name.
    const Identity b = alpha_canonical(parse_identity("x = y x"));
    CHECK(format_identity(b) == "v1 = v2 v1");
}

TEST_CASE("unordered canonical form ignores orientation") {
    const Identity fwd = parse_identity("x^2 t = t x^2");
    const Identity rev = parse_identity("t x^2 = x^2 t");
    CHECK(canonical_unordered(fwd) == canonical_unordered(rev));
    CHECK(canonical_unordered(fwd) == canonical_unordered(parse_identity("a^2 b = b a^2")));
    CHECK(canonical_unordered(fwd) != canonical_unordered(parse_identity("x^2 t = x t x")));
}

TEST_CASE("identity systems deduplicate up to orientation") {
    IdentitySystem sys("test");
    CHECK(sys.add(parse_identity("x y = y x")));
    CHECK(!sys.add(parse_identity("x y = y x")));
    CHECK(!sys.add(parse_identity("y x = x y")));  // same pair, flipped
    CHECK(sys.add(parse_identity("a b = b a")));   // alpha-variant is distinct
    CHECK(sys.size() == 2);
    CHECK(sys.contains(parse_identity("y x = x y")));
    CHECK(!sys.contains(parse_identity("x t = t x")));
}

TEST_CASE("merging systems keeps insertion order without duplicates") {
    IdentitySystem a("a"), b("b");
    a.add(parse_identity("x y = y x"));
    b.add(parse_identity("y x = x y"));
    b.add(parse_identity("x^2 = x"));
    const IdentitySystem m = merge(a, b, "m");
    CHECK(m.name() == "m");
    REQUIRE(m.size() == 2);
    CHECK(format_identity(*m.begin()) == "x y = y x");
}
