#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wordeq/identities.hpp"
#include "wordeq/words.hpp"

namespace wordeq {

// A word of the shape x^{e0} t1 x^{e1} t2 x^{e2} ... tr x^{er}: one base
// variable interleaved with r pairwise distinct separators.
struct RigidWord {
    std::vector<std::size_t> exponents;  // e_0 .. e_r
    std::vector<Variable> separators;    // t_1 .. t_r
    Variable base{"x"};

    // Separators default to t1, t2, ...
    explicit RigidWord(std::vector<std::size_t> exps);
    RigidWord(std::vector<std::size_t> exps, std::vector<Variable> seps,
              Variable base_var = Variable("x"));

    std::size_t r() const { return separators.size(); }
    std::size_t exponent_sum() const;
    bool n_limited(std::size_t n) const;  // exponent sum <= n
    bool cube_free() const { return m_free(3); }
    bool m_free(std::size_t m) const;     // every exponent < m

    Word to_word() const;
};

// Two rigid words over the same separators, read as an identity.
struct RigidIdentity {
    std::vector<std::size_t> lhs_exponents;
    std::vector<std::size_t> rhs_exponents;  // same length as lhs_exponents

    // No position may vanish on both sides.
    bool efficient() const;

    Identity to_identity() const;  // base x, separators t1..tr
};

// The three fixed identities
//   x y t1 x t2 y = y x t1 x t2 y
//   x t1 x y t2 y = x t1 y x t2 y
//   x t1 y t2 x y = x t1 y t2 y x
IdentitySystem ids_O();

// The single identity x^n t1 ... tn = (t1 x)(t2 x) ... (tn x); n >= 3.
IdentitySystem ids_A(std::size_t n);

// The n rigid words x^{n-1}t, x^{n-2}tx, ..., tx^{n-1}; n >= 3.
std::vector<RigidWord> words_B(std::size_t n);

// All unordered pairs of distinct words_B(n) members, C(n,2) identities.
IdentitySystem ids_B(std::size_t n);

// The n-1 consecutive pairs (the display form); equivalent to ids_B(n).
IdentitySystem ids_B_chain(std::size_t n);

// {x^4 = x^3, x^3 t = t x^3, x^{2n} t1 ... t{2n} = (t1 x) ... (t{2n} x)};
// n >= 2.
IdentitySystem ids_C(std::size_t n);

// The n cube-free words with n-1 separators and exponent sum 2n-1: word i
// has exponent 1 in position i and 2 elsewhere; n >= 2.
std::vector<RigidWord> words_D(std::size_t n);

// All unordered pairs of distinct words_D(n) members.
IdentitySystem ids_D(std::size_t n);

// Consecutive pairs (the display form); equivalent to ids_D(n).
IdentitySystem ids_D_chain(std::size_t n);

// {x^{m+1} = x^m, x^m t = t x^m}; m >= 1.
IdentitySystem ids_E(std::size_t m);

// The m-free rigid word with r separators and every exponent m-1;
// m >= 2, r >= 1.
RigidWord word_w(std::size_t m, std::size_t r);

// Every rigid word with r <= r_max separators and exponent sum <= sum_max,
// ordered by r then lexicographically by exponent vector. Exponents may be
// zero, so the empty word and bare separator words are included.
std::vector<RigidWord> enumerate_rigid_words(std::size_t r_max, std::size_t sum_max);

// The data an m-testable semigroup sees of a word: its short prefix and
// suffix and its set of length-m factors.
struct MTestProfile {
    Word prefix;  // length min(m-1, |w|)
    Word suffix;  // length min(m-1, |w|)
    std::set<Word> factor_set;  // factors of length exactly m

    friend bool operator==(const MTestProfile& a, const MTestProfile& b) {
        return a.prefix == b.prefix && a.suffix == b.suffix && a.factor_set == b.factor_set;
    }
};

MTestProfile m_test_profile(const Word& w, std::size_t m);  // m >= 2

// Semigroup-level test: both sides must be nonempty (throws otherwise);
// true iff the m-test profiles coincide.
bool tm_satisfies(std::size_t m, const Identity& id);

// Monoid-level test: for every subset S of the identity's variables,
// deleting S from both sides must leave either two empty words or two
// nonempty words whose profiles coincide.
bool tm1_satisfies(std::size_t m, const Identity& id);

// Expands a family directive: "@O", "@A(n)", "@B(n)", "@C(n)", "@D(n)",
// "@E(m)". The B and D directives expand to the pairwise identity sets.
// Throws ParseError on anything else.
IdentitySystem expand_directive(std::string_view token);

// Basis source: one "LHS = RHS" identity or one directive per line;
// blank lines and '#' comments ignored.
IdentitySystem parse_basis(std::string_view text, std::string name);

// Reads a basis file; throws std::runtime_error when unreadable.
IdentitySystem load_basis_file(const std::string& path);

}  // namespace wordeq
