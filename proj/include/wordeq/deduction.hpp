#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "wordeq/identities.hpp"
#include "wordeq/match.hpp"
#include "wordeq/words.hpp"

namespace wordeq {

// Bounds for the breadth-first searches. Hitting a bound is never an
// error; results just stop being complete.
struct SearchLimits {
    std::size_t max_word_length = 0;
    std::size_t max_visited_words = 200000;

    // Deductions at desk scale never need to triple the word length.
    static SearchLimits for_word(const Word& w);
    static SearchLimits for_goal(const Identity& goal);
};

// Copies of `given` with zero fields replaced by the defaults for w (or
// for the longer side of a goal).
SearchLimits resolve_limits(const SearchLimits& given, const Word& w);
SearchLimits resolve_limits(const SearchLimits& given, const Identity& goal);

// All words directly deducible from w in one step: replace one occurrence
// of an instantiated side of an identity by the correspondingly
// instantiated other side. Both orientations are used; results equal to w
// are discarded. A variable occurring only in the replacement side is
// instantiated with the empty word (such orientations grow the alphabet
// unboundedly otherwise; none of the bundled families has them).
std::set<Word> one_step_rewrites(const Word& w, const IdentitySystem& sigma_set);

// w is an isoterm for sigma_set iff no nontrivial one-step rewrite exists.
// Any longer deduction chain would have to begin with such a step.
bool is_isoterm(const Word& w, const IdentitySystem& sigma_set);

struct ClosureResult {
    std::set<Word> words;
    bool complete = false;
    // Visited-set size at the first limit event (length prune or visited
    // cap); empty exactly when complete.
    std::optional<std::size_t> frontier_truncated_at;
};

// Breadth-first set of words reachable from w, pruning any candidate
// longer than limits.max_word_length and stopping once the visited set
// would exceed limits.max_visited_words.
ClosureResult closure(const Word& w, const IdentitySystem& sigma_set,
                      const SearchLimits& limits);

// One deduction step: `word` arises from the previous word (or the start
// word) by applying `rule` oriented as recorded, at the occurrence given
// by `solution`. solution.sigma covers every variable of both sides of
// the rule, so the step replays as
//   prefix . sigma(rule.lhs) . suffix  ->  prefix . sigma(rule.rhs) . suffix.
struct TraceStep {
    Word word;
    Identity rule;
    MatchSolution solution;
};

struct RewriteTrace {
    std::vector<TraceStep> steps;

    std::size_t length() const { return steps.size(); }
};

// Checks a trace against the words it claims: every step must replay from
// its predecessor, change the word, and use a rule of sigma_set (in either
// orientation).
bool replay(const Word& start, const RewriteTrace& trace, const IdentitySystem& sigma_set);

enum class DeductionStatus { Proved, Unknown };

struct DeductionResult {
    DeductionStatus status = DeductionStatus::Unknown;
    RewriteTrace trace;  // meaningful only when Proved

    bool proved() const { return status == DeductionStatus::Proved; }
};

// Bounded search for a deduction of goal.lhs ≈ goal.rhs from sigma_set.
// Proved traces are shortest (BFS); a trivial goal is Proved with an empty
// trace; Unknown only means "not found within limits", never a disproof.
DeductionResult deducible(const Identity& goal, const IdentitySystem& sigma_set,
                          const SearchLimits& limits);

enum class EquivalenceStatus { Equivalent, Unknown };

struct BasisComparison {
    EquivalenceStatus status = EquivalenceStatus::Unknown;
    // One proof per identity, sigma1's members first (each against
    // base ∪ sigma2), then sigma2's (against base ∪ sigma1).
    std::vector<std::pair<Identity, RewriteTrace>> proofs;
    std::optional<Identity> unproved;  // first failure, when Unknown
};

// Do sigma1 and sigma2 define the same variety relative to base? Checks
// both directions by bounded deduction of every member identity.
BasisComparison bases_equivalent(const IdentitySystem& sigma1, const IdentitySystem& sigma2,
                                 const IdentitySystem& base, const SearchLimits& limits);

}  // namespace wordeq
