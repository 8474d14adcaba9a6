#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wordeq/identities.hpp"
#include "wordeq/words.hpp"

namespace wordeq {

// A set partition of an indexed ground list of words, stored as a
// restricted-growth string: block_of[i] is the block of the i-th ground
// word, with blocks numbered 0, 1, ... by first appearance.
class Partition {
public:
    // block_of need not be normalized; it is relabelled on construction.
    Partition(std::vector<Word> ground, std::vector<std::size_t> block_of);

    static Partition equality(std::vector<Word> ground);      // all singletons
    static Partition single_block(std::vector<Word> ground);  // one block

    const std::vector<Word>& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }

    std::size_t block_index(std::size_t i) const { return block_of_[i]; }
    bool same_block(std::size_t i, std::size_t j) const { return block_of_[i] == block_of_[j]; }
    std::size_t block_count() const;
    std::vector<std::vector<std::size_t>> blocks() const;  // ground order throughout

    // Blocks separated by "|", members by ","; e.g. "x t x,t x^2|x^2 t".
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.ground_ == b.ground_ && a.block_of_ == b.block_of_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<Word> ground_;
    std::vector<std::size_t> block_of_;
};

// All partitions of the ground list (at most 10 words), in lexicographic
// restricted-growth-string order: the single block comes first, equality
// last. The count is the Bell number of |ground|.
std::vector<Partition> enumerate_partitions(std::vector<Word> ground);

// Lattice operations on Eq(ground), ordered by refinement (finer below).
// All three throw on mismatched grounds.
Partition meet(const Partition& p, const Partition& q);  // common refinement
Partition join(const Partition& p, const Partition& q);  // transitive closure of union
bool is_finer(const Partition& p, const Partition& q);

// Id(π): one identity per unordered pair of distinct words sharing a
// block, in ground order.
IdentitySystem id_of_partition(const Partition& p);

// Parses a partition literal over the given ground: blocks separated by
// "|", member words by ",". Every ground word must appear exactly once.
Partition parse_partition(std::string_view text, const std::vector<Word>& ground);

}  // namespace wordeq
