#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordeq/deduction.hpp"
#include "wordeq/monoids.hpp"

namespace wordeq {

enum class CaseStatus { Pass, Fail, Inconclusive };

struct CaseOutcome {
    std::string name;
    CaseStatus status = CaseStatus::Inconclusive;
    std::string detail;
};

// The result of one harness run. Every claim the harness checked appears
// as a case; the run passes only if every case passed and no search or
// budget limit was hit.
struct VerificationReport {
    std::string tag;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::vector<CaseOutcome> cases;
    bool limits_hit = false;
    std::int64_t wall_ms = 0;

    CaseStatus overall() const;
    bool pass() const { return overall() == CaseStatus::Pass; }

    void add(std::string name, bool ok, std::string detail = "");
    void add_inconclusive(std::string name, std::string detail);

    // One line per case. wall time included only on request, so default
    // output is byte-stable across runs.
    std::string to_text(bool with_timing = false) const;
    std::string to_json(bool with_timing = false) const;
};

// Fiber protocol behind the anti-isomorphism between Eq(B_n) and the
// interval of varieties cut out by A_n: for every partition π of B_n and
// every u in B_n, the deduction closure of u under (0) ∪ A_n ∪ Id(π) must
// meet B_n in exactly the π-block of u. On top of the per-fiber cases the
// report checks injectivity of π -> fiber system, the order reversal in
// both directions, and a strict witness for every strict refinement.
// n in {3, 4}. limits.max_word_length == 0 selects the per-word default.
VerificationReport verify_phi(std::size_t n, const SearchLimits& limits);

// The same protocol over ground D_n with basis (0) ∪ C_n ∪ Id(π);
// n in {2, 3}.
VerificationReport verify_lambda(std::size_t n, const SearchLimits& limits);

enum class IsotermFamily { A, C };

// Bounded isoterm sweeps. Family A (n in {3, 4}): every
// (n-1)-limited rigid word with at most r_max separators passes both the
// one-step isoterm check against (0) ∪ A_n and the independent monoid
// check satisfies_all(M(w), ...); every (n-2)-limited one passes both
// again with B_n added. Family C (n in {2, 3}): the same with cube-free
// words, (2n-1)/(2n-2)-limited, against (0) ∪ C_n (∪ D_n). r_max <= 4.
VerificationReport verify_isoterm_lemmas(IsotermFamily family, std::size_t n,
                                         std::size_t r_max,
                                         std::uint64_t budget = kDefaultEvalBudget);

// The r <= 3 case analysis for efficient rigid identities with exponent
// sum n-1 on both sides: instantiations of shapes (i)-(iii) must already
// be B_n identities (membership up to renaming), and every instantiation
// of shapes (iv)-(ix) must be provably equivalent to its displayed set of
// B_n-shaped identities, with the recovered proof no longer than the
// displayed chain. n in {3, 4, 5}.
VerificationReport verify_case_equivalences(std::size_t n, const SearchLimits& limits);

// The checkable side of the join decomposition of E_m: M(w_{m,r}) lies in
// (0) ∪ E_m for r <= r_max, every m-free rigid word within bounds is an
// isoterm for (0) ∪ E_m, and no rigid word with an exponent >= m is.
// m in {2, 3}, r_max <= 3.
VerificationReport verify_em_join(std::size_t m, std::size_t r_max,
                                  std::uint64_t budget = kDefaultEvalBudget);

// The finite-generation surrogate: (i) xy is separated from every other
// candidate v over {x, y} with |v| <= 2m by the deletion-closed profile
// test, and (ii) for each r <= r_max, word_w(m, r) is the unique rigid
// word among bounded candidates that the test cannot tell apart from
// itself. m in {2, 3}, r_max <= 3.
VerificationReport verify_tm1(std::size_t m, std::size_t r_max);

}  // namespace wordeq
