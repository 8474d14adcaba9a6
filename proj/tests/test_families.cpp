#include <doctest.h>

#include "wordeq/families.hpp"

using namespace wordeq;

namespace {

std::vector<std::string> formatted(const std::vector<RigidWord>& ws) {
    std::vector<std::string> out;
    for (const RigidWord& w : ws) out.push_back(format_word(w.to_word()));
    return out;
}

std::vector<std::string> formatted(const IdentitySystem& sys) {
    std::vector<std::string> out;
    for (const Identity& id : sys) out.push_back(format_identity(id));
    return out;
}

}  // namespace

TEST_CASE("rigid words interleave one base with distinct separators") {
    const RigidWord w({2, 0, 1});
    CHECK(w.r() == 2);
    CHECK(w.exponent_sum() == 3);
    CHECK(format_word(w.to_word()) == "x^2 t1 t2 x");
    CHECK(w.n_limited(3));
    CHECK(!w.n_limited(2));
    CHECK(w.m_free(3));
    CHECK(!w.m_free(2));
    CHECK(RigidWord({1, 1}, {Variable("h")}, Variable("y")).to_word() == parse_word("y h y"));

    CHECK_THROWS_AS(RigidWord({}), std::invalid_argument);
    CHECK_THROWS_AS(RigidWord({1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(RigidWord({1}, {Variable("t")}), std::invalid_argument);
}

TEST_CASE("rigid identities and efficiency") {
    const RigidIdentity id{{2, 0}, {1, 1}};
    CHECK(id.efficient());
    CHECK(format_identity(id.to_identity()) == "x^2 t1 = x t1 x");
    CHECK(!RigidIdentity{{0, 1}, {0, 2}}.efficient());
}

TEST_CASE("the fixed three identities") {
    CHECK(formatted(ids_O()) ==
          std::vector<std::string>{"x y t1 x t2 y = y x t1 x t2 y",
                                   "x t1 x y t2 y = x t1 y x t2 y",
                                   "x t1 y t2 x y = x t1 y t2 y x"});
}

TEST_CASE("the one-identity power family") {
    CHECK(formatted(ids_A(3)) ==
          std::vector<std::string>{"x^3 t1 t2 t3 = t1 x t2 x t3 x"});
    CHECK(formatted(ids_A(4)) ==
          std::vector<std::string>{"x^4 t1 t2 t3 t4 = t1 x t2 x t3 x t4 x"});
    CHECK_THROWS_AS(ids_A(2), std::invalid_argument);
}

TEST_CASE("the sliding-separator word family") {
    CHECK(formatted(words_B(3)) == std::vector<std::string>{"x^2 t", "x t x", "t x^2"});
    CHECK(formatted(words_B(4)) ==
          std::vector<std::string>{"x^3 t", "x^2 t x", "x t x^2", "t x^3"});
    CHECK(ids_B(4).size() == 6);        // all unordered pairs
    CHECK(ids_B_chain(4).size() == 3);  // consecutive pairs
    CHECK(formatted(ids_B_chain(3)) ==
          std::vector<std::string>{"x^2 t = x t x", "x t x = t x^2"});
    CHECK_THROWS_AS(words_B(2), std::invalid_argument);
}

TEST_CASE("the bounded-exponent family with absorption") {
    CHECK(formatted(ids_C(2)) ==
          std::vector<std::string>{"x^4 = x^3", "x^3 t = t x^3",
                                   "x^4 t1 t2 t3 t4 = t1 x t2 x t3 x t4 x"});
    CHECK(ids_C(3).size() == 3);
    CHECK(formatted(ids_C(3))[2] == "x^6 t1 t2 t3 t4 t5 t6 = t1 x t2 x t3 x t4 x t5 x t6 x");
    CHECK_THROWS_AS(ids_C(1), std::invalid_argument);
}

TEST_CASE("the cube-free word family") {
    CHECK(formatted(words_D(2)) == std::vector<std::string>{"x t1 x^2", "x^2 t1 x"});
    CHECK(formatted(words_D(3)) ==
          std::vector<std::string>{"x t1 x^2 t2 x^2", "x^2 t1 x t2 x^2", "x^2 t1 x^2 t2 x"});
    for (const RigidWord& w : words_D(3)) {
        CHECK(w.cube_free());
        CHECK(w.exponent_sum() == 5);
    }
    CHECK(ids_D(3).size() == 3);
    CHECK(ids_D_chain(3).size() == 2);
    CHECK_THROWS_AS(words_D(1), std::invalid_argument);
}

TEST_CASE("the two-identity power family") {
    CHECK(formatted(ids_E(2)) == std::vector<std::string>{"x^3 = x^2", "x^2 t = t x^2"});
    CHECK(formatted(ids_E(1)) == std::vector<std::string>{"x^2 = x", "x t = t x"});
    CHECK_THROWS_AS(ids_E(0), std::invalid_argument);
}

TEST_CASE("the uniform-exponent word") {
    CHECK(format_word(word_w(2, 1).to_word()) == "x t1 x");
    CHECK(format_word(word_w(2, 2).to_word()) == "x t1 x t2 x");
    CHECK(format_word(word_w(3, 2).to_word()) == "x^2 t1 x^2 t2 x^2");
    CHECK(word_w(3, 1).m_free(3));
    CHECK_THROWS_AS(word_w(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(word_w(2, 0), std::invalid_argument);
}

TEST_CASE("rigid word enumeration covers zero exponents") {
    const auto ws = enumerate_rigid_words(1, 2);
    CHECK(formatted(ws) == std::vector<std::string>{"1", "x", "x^2", "t1", "t1 x", "t1 x^2",
                                                    "x t1", "x t1 x", "x^2 t1"});
    CHECK(enumerate_rigid_words(0, 0).size() == 1);
    CHECK(enumerate_rigid_words(2, 1).size() == 2 + 3 + 4);
}

TEST_CASE("profiles record short edges and length-m factors") {
    const MTestProfile p = m_test_profile(parse_word("x t x"), 2);
    CHECK(p.prefix == parse_word("x"));
    CHECK(p.suffix == parse_word("x"));
    CHECK(p.factor_set == std::set<Word>{parse_word("x t"), parse_word("t x")});

    const MTestProfile q = m_test_profile(parse_word("x"), 3);
    CHECK(q.prefix == parse_word("x"));  // clamped to the whole word
    CHECK(q.suffix == parse_word("x"));
    CHECK(q.factor_set.empty());

    CHECK_THROWS_AS(m_test_profile(parse_word("x"), 1), std::invalid_argument);
}

TEST_CASE("profile equality at the semigroup level") {
    CHECK(tm_satisfies(2, parse_identity("x t x = x t x t x")));
    CHECK(!tm_satisfies(2, parse_identity("x y = y x")));
    CHECK(!tm_satisfies(2, parse_identity("x y = x y x y")));  // factor y x appears
    CHECK_THROWS_AS(tm_satisfies(2, parse_identity("x = 1")), std::invalid_argument);
}

TEST_CASE("deletion-closed profile equality at the monoid level") {
    // Deleting x from both sides leaves t vs t t, whose 2-factor sets differ.
    CHECK(!tm1_satisfies(2, parse_identity("x t x = x t x t x")));
    CHECK(!tm1_satisfies(2, parse_identity("x y = x y x y")));
    CHECK(tm1_satisfies(2, parse_identity("x t x = x t x")));
    CHECK(tm1_satisfies(3, parse_identity("x^2 t1 x^2 = x^2 t1 x^2")));
    // Deleting everything leaves two empty words: fine.
    CHECK(tm1_satisfies(2, parse_identity("x y x = x y x")));
}

TEST_CASE("directives expand to the bundled families") {
    CHECK(formatted(expand_directive("@O")) == formatted(ids_O()));
    CHECK(formatted(expand_directive("@A(3)")) == formatted(ids_A(3)));
    CHECK(expand_directive("@B(4)").size() == 6);
    CHECK(expand_directive("@C(2)").size() == 3);
    CHECK(expand_directive("@D(2)").size() == 1);
    CHECK(expand_directive("@E(5)").size() == 2);
    CHECK_THROWS_AS(expand_directive("@F(3)"), ParseError);
    CHECK_THROWS_AS(expand_directive("@A"), ParseError);
    CHECK_THROWS_AS(expand_directive("@A(99999)"), ParseError);
    CHECK_THROWS_AS(expand_directive("A(3)"), ParseError);
}

TEST_CASE("basis text mixes identities, directives and comments") {
    const IdentitySystem sys = parse_basis(
        "# comment\n"
        "@E(2)\n"
        "\n"
        "x y = y x\n",
        "mixed");
    CHECK(sys.name() == "mixed");
    REQUIRE(sys.size() == 3);
    CHECK(formatted(sys)[2] == "x y = y x");

    CHECK_THROWS_AS(parse_basis("x y\n", "bad"), ParseError);
    try {
        parse_basis("x = x\n@nope\n", "bad");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}
