#include "wordeq/deduction.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace wordeq {

SearchLimits SearchLimits::for_word(const Word& w) {
    return SearchLimits{3 * w.size() + 6, 200000};
}

SearchLimits SearchLimits::for_goal(const Identity& goal) {
    return SearchLimits{3 * std::max(goal.lhs.size(), goal.rhs.size()) + 6, 200000};
}

SearchLimits resolve_limits(const SearchLimits& given, const Word& w) {
    SearchLimits out = given;
    if (out.max_word_length == 0) out.max_word_length = SearchLimits::for_word(w).max_word_length;
    if (out.max_visited_words == 0) out.max_visited_words = SearchLimits{}.max_visited_words;
    return out;
}

SearchLimits resolve_limits(const SearchLimits& given, const Identity& goal) {
    const Word& longer = goal.lhs.size() >= goal.rhs.size() ? goal.lhs : goal.rhs;
    return resolve_limits(given, longer);
}

namespace {

// A successor of a word together with how it was produced. `rule` is
// oriented as applied and solution.sigma covers both of its sides.
struct Production {
    Identity rule;
    MatchSolution solution;
};

// Deterministic one-step expansion: for every identity in system order,
// both orientations (as-written first), every match in matcher order.
// Keyed by successor, keeping the first producer of each.
std::map<Word, Production> expand(const Word& w, const IdentitySystem& sigma_set) {
    std::map<Word, Production> out;
    for (const auto& id : sigma_set) {
        const Identity oriented[2] = {id, Identity{id.rhs, id.lhs}};
        for (const auto& rule : oriented) {
            if (rule.lhs == rule.rhs) continue;
            for (auto& sol : match_pattern(rule.lhs, w, /*allow_empty=*/true)) {
                // Variables exclusive to the replacement side take the
                // empty word (see one_step_rewrites).
                for (const auto& v : rule.rhs.variables())
                    if (!sol.sigma.bound(v)) sol.sigma.set(v, Word{});
                Word result = sol.prefix * sol.sigma.apply(rule.rhs) * sol.suffix;
                if (result == w) continue;
                out.emplace(std::move(result), Production{rule, std::move(sol)});
            }
        }
    }
    return out;
}

}  // namespace

std::set<Word> one_step_rewrites(const Word& w, const IdentitySystem& sigma_set) {
    std::set<Word> out;
    for (const auto& [word, production] : expand(w, sigma_set)) out.insert(word);
    return out;
}

bool is_isoterm(const Word& w, const IdentitySystem& sigma_set) {
    return one_step_rewrites(w, sigma_set).empty();
}

ClosureResult closure(const Word& w, const IdentitySystem& sigma_set,
                      const SearchLimits& limits) {
    ClosureResult res;
    res.words.insert(w);
    res.complete = true;
    std::deque<Word> queue{w};
    auto limit_event = [&res]() {
        if (res.complete) {
            res.complete = false;
            res.frontier_truncated_at = res.words.size();
        }
    };
    while (!queue.empty()) {
        const Word current = std::move(queue.front());
        queue.pop_front();
        for (const auto& [next, production] : expand(current, sigma_set)) {
            if (next.size() > limits.max_word_length) {
                limit_event();
                continue;
            }
            if (res.words.count(next)) continue;
            if (res.words.size() >= limits.max_visited_words) {
                limit_event();
                continue;
            }
            res.words.insert(next);
            queue.push_back(next);
        }
    }
    return res;
}

bool replay(const Word& start, const RewriteTrace& trace, const IdentitySystem& sigma_set) {
    Word current = start;
    for (const auto& step : trace.steps) {
        if (!sigma_set.contains(step.rule)) return false;
        const Word source =
            step.solution.prefix * step.solution.sigma.apply(step.rule.lhs) * step.solution.suffix;
        const Word result =
            step.solution.prefix * step.solution.sigma.apply(step.rule.rhs) * step.solution.suffix;
        if (source != current || result != step.word || result == current) return false;
        current = step.word;
    }
    return true;
}

DeductionResult deducible(const Identity& goal, const IdentitySystem& sigma_set,
                          const SearchLimits& limits) {
    if (goal.trivial()) return DeductionResult{DeductionStatus::Proved, {}};
    struct Parent {
        Word word;
        Production production;
    };
    std::map<Word, Parent> parents;  // visited words minus the start
    std::deque<Word> queue{goal.lhs};
    std::size_t visited = 1;
    auto build_trace = [&](const Word& found) {
        std::vector<TraceStep> steps;
        Word at = found;
        while (at != goal.lhs) {
            const Parent& p = parents.at(at);
            steps.push_back(TraceStep{at, p.production.rule, p.production.solution});
            at = p.word;
        }
        std::reverse(steps.begin(), steps.end());
        return RewriteTrace{std::move(steps)};
    };
    while (!queue.empty()) {
        const Word current = std::move(queue.front());
        queue.pop_front();
        for (auto& [next, production] : expand(current, sigma_set)) {
            if (next == goal.lhs || parents.count(next)) continue;
            if (next.size() > limits.max_word_length && next != goal.rhs) continue;
            if (visited >= limits.max_visited_words) return {DeductionStatus::Unknown, {}};
            parents.emplace(next, Parent{current, std::move(production)});
            ++visited;
            if (next == goal.rhs)
                return DeductionResult{DeductionStatus::Proved, build_trace(next)};
            queue.push_back(next);
        }
    }
    return {DeductionStatus::Unknown, {}};
}

BasisComparison bases_equivalent(const IdentitySystem& sigma1, const IdentitySystem& sigma2,
                                 const IdentitySystem& base, const SearchLimits& limits) {
    BasisComparison out;
    const IdentitySystem with2 = merge(base, sigma2, base.name() + "+" + sigma2.name());
    const IdentitySystem with1 = merge(base, sigma1, base.name() + "+" + sigma1.name());
    auto run = [&](const IdentitySystem& goals, const IdentitySystem& from) {
        for (const auto& goal : goals) {
            DeductionResult res = deducible(goal, from, limits);
            if (!res.proved()) {
                out.unproved = goal;
                return false;
            }
            out.proofs.emplace_back(goal, std::move(res.trace));
        }
        return true;
    };
    if (run(sigma1, with2) && run(sigma2, with1)) out.status = EquivalenceStatus::Equivalent;
    return out;
}

}  // namespace wordeq
