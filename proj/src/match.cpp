#include "wordeq/match.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace wordeq {

const Word& Substitution::get(const Variable& v) const {
    const auto it = map_.find(v);
    if (it == map_.end())
        throw std::runtime_error(fmt::format("substitution has no binding for '{}'", v.name));
    return it->second;
}

Word Substitution::apply(const Word& w) const {
    Word out;
    for (const auto& v : w) {
        const auto it = map_.find(v);
        if (it == map_.end())
            out.push_back(v);
        else
            out *= it->second;
    }
    return out;
}

namespace {

// Backtracking core: match pattern[pi..] starting at target position ti,
// extending sigma; whatever remains once the pattern is exhausted becomes
// the suffix. An unbound variable tries image lengths 0 (when allowed),
// 1, 2, ..., so solutions come out ordered lexicographically by their
// split positions (prefix end, then each image boundary left to right).
// That also makes them pairwise distinct: the split tuple determines the
// recursion path and vice versa.
void match_rec(const Word& pattern, std::size_t pi, const Word& target, std::size_t ti,
               bool allow_empty, Substitution& sigma, std::size_t prefix_len,
               std::vector<MatchSolution>& out) {
    if (pi == pattern.size()) {
        out.push_back(MatchSolution{sigma, target.subword(0, prefix_len),
                                    target.subword(ti, target.size() - ti)});
        return;
    }
    const Variable& v = pattern[pi];
    if (sigma.bound(v)) {
        const Word& image = sigma.get(v);
        if (ti + image.size() > target.size()) return;
        for (std::size_t k = 0; k < image.size(); ++k)
            if (!(target[ti + k] == image[k])) return;
        match_rec(pattern, pi + 1, target, ti + image.size(), allow_empty, sigma, prefix_len,
                  out);
        return;
    }
    const std::size_t min_len = allow_empty ? 0 : 1;
    for (std::size_t len = min_len; ti + len <= target.size(); ++len) {
        sigma.set(v, target.subword(ti, len));
        match_rec(pattern, pi + 1, target, ti + len, allow_empty, sigma, prefix_len, out);
    }
    sigma.unset(v);
}

}  // namespace

std::vector<MatchSolution> match_pattern(const Word& pattern, const Word& target,
                                         bool allow_empty) {
    std::vector<MatchSolution> out;
    for (std::size_t prefix_len = 0; prefix_len <= target.size(); ++prefix_len) {
        Substitution sigma;
        match_rec(pattern, 0, target, prefix_len, allow_empty, sigma, prefix_len, out);
    }
    return out;
}

}  // namespace wordeq
