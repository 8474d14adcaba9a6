#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordeq/partitions.hpp"

namespace wordeq {

// A finite lattice given by its order relation. Meets and joins are
// derived from leq; check_lattice_axioms decides whether they exist.
class FiniteLattice {
public:
    // leq is flattened row-major: leq[a*n + b] != 0 iff a <= b.
    FiniteLattice(std::string name, std::vector<std::string> labels,
                  std::vector<std::uint8_t> leq);

    const std::string& name() const { return name_; }
    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    std::optional<std::size_t> find(std::string_view label) const;

    bool leq(std::size_t a, std::size_t b) const { return leq_[a * labels_.size() + b] != 0; }

    // Greatest lower / least upper bound; empty when none or not unique
    // (i.e. when the order is not a lattice at that pair).
    std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
    std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> leq_;
};

struct LatticeAxiomReport {
    bool ok = false;
    std::string detail;  // first violated axiom, when !ok
};

// Reflexivity, antisymmetry, transitivity, and existence of binary meets
// and joins for every pair.
LatticeAxiomReport check_lattice_axioms(const FiniteLattice& L);

// Eq(k): the lattice of partitions of {1, ..., k}, ordered by refinement,
// labels like "1,2|3". Capped at k <= 6 (Bell(6) = 203 elements).
FiniteLattice partition_lattice(std::size_t k);

// The partitions behind partition_lattice's elements, in the same order,
// on the ground words "p1", ..., "pk" standing in for the points.
std::vector<Partition> partition_lattice_elements(std::size_t k);

// Exhaustive backtracking search for an injective map L -> Eq(k) that
// preserves binary meets and joins (bounds need not map to bounds).
// Deterministic: elements are placed in a fixed linear extension and
// candidates tried in partition_lattice order; the first embedding found
// is returned as element indices into partition_lattice(k). Size guards:
// |L| <= 8, k <= 5. Callers should check_lattice_axioms(L) first.
std::optional<std::vector<std::size_t>> sublattice_embedding_search(const FiniteLattice& L,
                                                                    std::size_t k);

// Lattice file: JSON with "elements" (distinct label strings) and "leq"
// (pairs [a, b] of labels or element indices, read as a <= b). The
// reflexive-transitive closure is taken, so listing covers suffices.
// Throws ParseError on malformed input; order/lattice axioms are NOT
// checked here.
FiniteLattice load_lattice_json(std::string_view text, std::string name);
FiniteLattice load_lattice_file(const std::string& path);

}  // namespace wordeq
