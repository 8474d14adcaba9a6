#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordeq/identities.hpp"
#include "wordeq/words.hpp"

namespace wordeq {

// A finite monoid as an explicit multiplication table. Elements are
// referred to by index; labels are for output only.
class FiniteMonoid {
public:
    FiniteMonoid(std::string name, std::vector<std::string> elements,
                 std::vector<std::size_t> table, std::size_t identity_index,
                 std::optional<std::size_t> zero_index);

    const std::string& name() const { return name_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& label(std::size_t i) const { return elements_[i]; }

    std::size_t mul(std::size_t a, std::size_t b) const {
        return table_[a * elements_.size() + b];
    }

    std::size_t identity_index() const { return identity_index_; }
    std::optional<std::size_t> zero_index() const { return zero_index_; }

    std::optional<std::size_t> find(std::string_view label) const;

private:
    std::string name_;
    std::vector<std::string> elements_;
    std::vector<std::size_t> table_;  // flattened size() x size()
    std::size_t identity_index_;
    std::optional<std::size_t> zero_index_;
};

// The factor monoid M(w): 1, every nonempty factor of w, and a zero;
// u·v = uv when uv is again a factor of w, and 0 otherwise. Elements are
// labelled by their words ("1" and "0" at the ends, factors in shortlex
// order between them).
FiniteMonoid factor_monoid(const Word& w);

struct MonoidAxiomReport {
    bool ok = false;
    std::string detail;  // first violated law, when !ok
};

// Exhaustive check of the identity laws, the zero laws (when a zero is
// declared), and associativity over all triples.
MonoidAxiomReport check_monoid_axioms(const FiniteMonoid& M);

inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000;

// Exact number of table lookups a full satisfies() enumeration performs,
// before any counterexample short-circuit. Used for budget refusal.
std::uint64_t satisfaction_cost(const FiniteMonoid& M, const Identity& id);

enum class SatStatus { Holds, Fails, OverBudget };

struct Counterexample {
    // Element index assigned to each variable (first-occurrence order).
    std::vector<std::pair<Variable, std::size_t>> assignment;
    std::size_t lhs_value = 0;
    std::size_t rhs_value = 0;
};

struct SatisfactionResult {
    SatStatus status = SatStatus::OverBudget;
    std::optional<Counterexample> counterexample;  // set when Fails
    std::uint64_t required_lookups = 0;            // set when OverBudget

    bool holds() const { return status == SatStatus::Holds; }
};

// Does every assignment of the identity's variables to elements of M give
// the two sides equal values? Empty words evaluate to the identity
// element. Enumeration is refused outright (OverBudget, with the required
// count) when satisfaction_cost exceeds the budget.
SatisfactionResult satisfies(const FiniteMonoid& M, const Identity& id,
                             std::uint64_t budget = kDefaultEvalBudget);

struct SystemSatisfactionResult {
    SatStatus status = SatStatus::Holds;
    std::optional<Identity> culprit;  // failing or refused identity
    SatisfactionResult detail;

    bool holds() const { return status == SatStatus::Holds; }
};

// Conjunction over the system, short-circuiting at the first failure or
// budget refusal.
SystemSatisfactionResult satisfies_all(const FiniteMonoid& M, const IdentitySystem& sigma_set,
                                       std::uint64_t budget = kDefaultEvalBudget);

// "elements: <n>", one label per line, then n rows of space-separated
// indices.
std::string dump_monoid(const FiniteMonoid& M);

// Parses the dump format, validates index ranges, and locates the
// two-sided identity (required) and zero (optional). Throws ParseError on
// malformed input or when no identity element exists.
FiniteMonoid load_monoid_dump(std::string_view text, std::string name);

}  // namespace wordeq
