#include <doctest.h>

#include "wordeq/families.hpp"
#include "wordeq/monoids.hpp"

using namespace wordeq;

TEST_CASE("factor monoid sizes: 2 + number of factors") {
    CHECK(factor_monoid(parse_word("x y x")).size() == 7);
    CHECK(factor_monoid(parse_word("x y x y")).size() == 9);
    CHECK(factor_monoid(parse_word("x")).size() == 3);
    CHECK(factor_monoid(Word{}).size() == 2);
}

TEST_CASE("factor monoid multiplication truncates at non-factors") {
    const FiniteMonoid M = factor_monoid(parse_word("x y x"));
    const std::size_t one = M.identity_index();
    const std::size_t zero = *M.zero_index();
    const std::size_t x = *M.find("x");
    const std::size_t y = *M.find("y");
    const std::size_t xy = *M.find("x y");

    CHECK(M.mul(x, y) == xy);
    CHECK(M.mul(x, x) == zero);  // x^2 is not a factor of x y x
    CHECK(M.mul(xy, x) == *M.find("x y x"));
    CHECK(M.mul(one, x) == x);
    CHECK(M.mul(x, one) == x);
    CHECK(M.mul(zero, x) == zero);
    CHECK(M.mul(*M.find("x y x"), x) == zero);
    CHECK(!M.find("y y").has_value());
}

TEST_CASE("monoid axioms hold for constructed tables") {
    for (const char* w : {"x", "x y x", "x y x y", "x t1 x t2 x", "x^2 t1 x^2"}) {
        const MonoidAxiomReport rep = check_monoid_axioms(factor_monoid(parse_word(w)));
        CAPTURE(w);
        CHECK(rep.ok);
        CHECK(rep.detail.empty());
    }
}

TEST_CASE("axiom checker pinpoints violations") {
    // 2-element table where multiplication is not associative:
    // a*a = 1, a*1 = a, 1*a = a, 1*1 = 1 is fine (Z2); break identity.
    const FiniteMonoid broken("broken", {"1", "a"}, {0, 0, 1, 0}, 0, std::nullopt);
    const MonoidAxiomReport rep = check_monoid_axioms(broken);
    CHECK(!rep.ok);
    CHECK(!rep.detail.empty());
}

TEST_CASE("dump and reload round-trips the table") {
    const FiniteMonoid M = factor_monoid(parse_word("x y x"));
    const FiniteMonoid back = load_monoid_dump(dump_monoid(M), "reloaded");
    REQUIRE(back.size() == M.size());
    CHECK(back.identity_index() == M.identity_index());
    REQUIRE(back.zero_index().has_value());
    CHECK(*back.zero_index() == *M.zero_index());
    for (std::size_t a = 0; a < M.size(); ++a)
        for (std::size_t b = 0; b < M.size(); ++b) CHECK(back.mul(a, b) == M.mul(a, b));
}

TEST_CASE("loading rejects malformed dumps") {
    CHECK_THROWS_AS(load_monoid_dump("garbage", "g"), ParseError);
    CHECK_THROWS_AS(load_monoid_dump("elements: 0\n", "g"), ParseError);
    CHECK_THROWS_AS(load_monoid_dump("elements: 2\na\nb\n0 1\n0\n", "g"), ParseError);
    CHECK_THROWS_AS(load_monoid_dump("elements: 2\na\nb\n0 5\n1 0\n", "g"), ParseError);
    // A table with no identity element.
    CHECK_THROWS_AS(load_monoid_dump("elements: 2\na\nb\n0 0\n0 0\n", "g"), ParseError);
}

TEST_CASE("satisfaction by exhaustive substitution") {
    const FiniteMonoid M = factor_monoid(parse_word("x y x"));
    CHECK(satisfies(M, parse_identity("x^3 = x^2")).holds());
    CHECK(satisfies(M, parse_identity("x y t1 x t2 y = y x t1 x t2 y")).holds());

    const SatisfactionResult res = satisfies(M, parse_identity("x^2 = x"));
    REQUIRE(res.status == SatStatus::Fails);
    REQUIRE(res.counterexample.has_value());
    const Counterexample& cex = *res.counterexample;
    REQUIRE(cex.assignment.size() == 1);
    CHECK(cex.lhs_value != cex.rhs_value);
    // The reported assignment really is a counterexample.
    const std::size_t v = cex.assignment[0].second;
    CHECK(M.mul(v, v) == cex.lhs_value);
    CHECK(v == cex.rhs_value);
}

TEST_CASE("empty sides evaluate to the identity element") {
    const FiniteMonoid M = factor_monoid(parse_word("x"));
    CHECK(satisfies(M, parse_identity("x = 1")).status == SatStatus::Fails);
    CHECK(satisfies(M, Identity{Word{}, Word{}}).holds());
}

TEST_CASE("budget refusal is exact and upfront") {
    const FiniteMonoid M = factor_monoid(parse_word("x"));  // 3 elements
    const Identity comm = parse_identity("x y = y x");
    CHECK(satisfaction_cost(M, comm) == 30);

    const SatisfactionResult res = satisfies(M, comm, 29);
    CHECK(res.status == SatStatus::OverBudget);
    CHECK(res.required_lookups == 30);
    CHECK(satisfies(M, comm, 30).status != SatStatus::OverBudget);
}

TEST_CASE("system satisfaction reports the culprit") {
    const FiniteMonoid M = factor_monoid(parse_word("x y x"));
    IdentitySystem sys("sys");
    sys.add(parse_identity("x^3 = x^2"));
    sys.add(parse_identity("x^2 = x"));
    const SystemSatisfactionResult res = satisfies_all(M, sys);
    CHECK(res.status == SatStatus::Fails);
    REQUIRE(res.culprit.has_value());
    CHECK(format_identity(*res.culprit) == "x^2 = x");

    IdentitySystem fine("fine");
    fine.add(parse_identity("x^3 = x^2"));
    CHECK(satisfies_all(M, fine).holds());
}

TEST_CASE("the fixed three identities hold in every factor monoid of a rigid word") {
    for (const char* w : {"x t1 x", "x^2 t1 x", "x t1 x t2 x"}) {
        CAPTURE(w);
        CHECK(satisfies_all(factor_monoid(parse_word(w)), ids_O()).holds());
    }
}
