#pragma once

#include <map>
#include <vector>

#include "wordeq/words.hpp"

namespace wordeq {

// A substitution X -> X*: an endomorphism of the free monoid determined by
// where it sends each variable. Variables absent from the map are fixed.
// In the monoid signature a variable may be sent to the empty word.
class Substitution {
public:
    Substitution() = default;

    void set(const Variable& v, Word image) { map_.insert_or_assign(v, std::move(image)); }
    void unset(const Variable& v) { map_.erase(v); }
    bool bound(const Variable& v) const { return map_.count(v) != 0; }
    const Word& get(const Variable& v) const;

    // Applies the induced endomorphism letter by letter.
    Word apply(const Word& w) const;

    const std::map<Variable, Word>& entries() const { return map_; }

    friend bool operator==(const Substitution& a, const Substitution& b) {
        return a.map_ == b.map_;
    }
    friend bool operator<(const Substitution& a, const Substitution& b) {
        return a.map_ < b.map_;
    }

private:
    std::map<Variable, Word> map_;
};

// One way of seeing `pattern` inside a target word w: a factorisation
// w = prefix . sigma(pattern) . suffix.
struct MatchSolution {
    Substitution sigma;
    Word prefix;
    Word suffix;

    friend bool operator==(const MatchSolution& a, const MatchSolution& b) {
        return a.sigma == b.sigma && a.prefix == b.prefix && a.suffix == b.suffix;
    }
};

// Enumerates every factorisation target = prefix . sigma(pattern) . suffix,
// with sigma defined exactly on the variables of pattern. With allow_empty
// (the monoid convention) sigma may erase variables; with allow_empty =
// false every image must be nonempty. The list is complete, duplicate-free
// and deterministically ordered: lexicographic by split positions (end of
// prefix, then each image boundary left to right).
std::vector<MatchSolution> match_pattern(const Word& pattern, const Word& target,
                                         bool allow_empty = true);

}  // namespace wordeq
