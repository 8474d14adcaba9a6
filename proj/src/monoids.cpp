#include "wordeq/monoids.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <fmt/format.h>

namespace wordeq {

FiniteMonoid::FiniteMonoid(std::string name, std::vector<std::string> elements,
                           std::vector<std::size_t> table, std::size_t identity_index,
                           std::optional<std::size_t> zero_index)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      table_(std::move(table)),
      identity_index_(identity_index),
      zero_index_(zero_index) {
    const std::size_t n = elements_.size();
    if (table_.size() != n * n)
        throw std::invalid_argument(fmt::format("table size {} does not match {} elements",
                                                table_.size(), n));
    for (const std::size_t entry : table_)
        if (entry >= n) throw std::invalid_argument("table entry out of range");
    if (identity_index_ >= n) throw std::invalid_argument("identity index out of range");
    if (zero_index_ && *zero_index_ >= n)
        throw std::invalid_argument("zero index out of range");
}

std::optional<std::size_t> FiniteMonoid::find(std::string_view label) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == label) return i;
    return std::nullopt;
}

FiniteMonoid factor_monoid(const Word& w) {
    const std::set<Word> factor_set = factors(w);
    std::vector<Word> factor_list(factor_set.begin(), factor_set.end());  // shortlex
    const std::size_t n = factor_list.size() + 2;
    const std::size_t one = 0;
    const std::size_t zero = n - 1;

    std::map<Word, std::size_t> index;
    std::vector<std::string> labels(n);
    labels[one] = "1";
    labels[zero] = "0";
    for (std::size_t i = 0; i < factor_list.size(); ++i) {
        labels[i + 1] = format_word(factor_list[i]);
        index.emplace(factor_list[i], i + 1);
    }
    index.emplace(Word{}, one);

    auto word_of = [&](std::size_t i) -> const Word& {
        static const Word empty;
        return i == one ? empty : factor_list[i - 1];
    };
    std::vector<std::size_t> table(n * n, zero);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == zero || b == zero) continue;  // zero annihilates
            const Word product = word_of(a) * word_of(b);
            const auto it = index.find(product);
            table[a * n + b] = it == index.end() ? zero : it->second;
        }
    }
    return FiniteMonoid(fmt::format("M({})", format_word(w)), std::move(labels),
                        std::move(table), one, zero);
}

MonoidAxiomReport check_monoid_axioms(const FiniteMonoid& M) {
    const std::size_t n = M.size();
    const std::size_t e = M.identity_index();
    for (std::size_t a = 0; a < n; ++a) {
        if (M.mul(e, a) != a)
            return {false, fmt::format("1·{} ≠ {}", M.label(a), M.label(a))};
        if (M.mul(a, e) != a)
            return {false, fmt::format("{}·1 ≠ {}", M.label(a), M.label(a))};
    }
    if (M.zero_index()) {
        const std::size_t z = *M.zero_index();
        for (std::size_t a = 0; a < n; ++a) {
            if (M.mul(z, a) != z || M.mul(a, z) != z)
                return {false, fmt::format("0 does not annihilate {}", M.label(a))};
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (M.mul(M.mul(a, b), c) != M.mul(a, M.mul(b, c)))
                    return {false, fmt::format("associativity fails at ({}, {}, {})",
                                               M.label(a), M.label(b), M.label(c))};
    return {true, ""};
}

namespace {

// One side of an identity prepared for incremental evaluation under an
// odometer over variable assignments: positions hold variable indices
// (first-occurrence order across the identity), and restart[j] is the
// leftmost position that must be recomputed when digit j is the leftmost
// changed digit (SIZE_MAX when no position of this side is affected).
struct SidePlan {
    std::vector<std::size_t> positions;  // variable index per letter
    std::vector<std::size_t> restart;    // per variable index
};

constexpr std::size_t kUnaffected = static_cast<std::size_t>(-1);

SidePlan plan_side(const Word& side, const std::vector<Variable>& vars) {
    SidePlan plan;
    plan.positions.reserve(side.size());
    std::vector<std::size_t> first(vars.size(), kUnaffected);
    for (const auto& letter : side) {
        const auto it = std::find(vars.begin(), vars.end(), letter);
        const auto j = static_cast<std::size_t>(it - vars.begin());
        if (first[j] == kUnaffected) first[j] = plan.positions.size();
        plan.positions.push_back(j);
    }
    plan.restart.assign(vars.size(), kUnaffected);
    std::size_t running = kUnaffected;
    for (std::size_t j = vars.size(); j-- > 0;) {
        running = std::min(running, first[j]);
        plan.restart[j] = running;
    }
    return plan;
}

// Exact lookups for the full enumeration of one side: the initial full
// evaluation plus, for each digit j, its (n-1)·n^j leftmost-changes, each
// recomputing len - restart[j] products. Saturates instead of overflowing.
std::uint64_t side_cost(const SidePlan& plan, std::size_t num_vars, std::uint64_t n) {
    const std::uint64_t cap = static_cast<std::uint64_t>(-1);
    const auto len = static_cast<std::uint64_t>(plan.positions.size());
    std::uint64_t total = len;
    std::uint64_t weight = n - 1;  // (n-1)·n^j, built up from j = 0
    for (std::size_t j = 0; j < num_vars; ++j) {
        if (plan.restart[j] != kUnaffected) {
            const std::uint64_t per = len - plan.restart[j];  // >= 1: restart < len
            if (weight > cap / per) return cap;
            if (total > cap - weight * per) return cap;
            total += weight * per;
        }
        if (weight > cap / n) return cap;
        weight *= n;
    }
    return total;
}

// Incrementally evaluated side: prefix[i] is the product of the first i
// letters under the current assignment.
struct SideEval {
    const SidePlan* plan;
    std::vector<std::size_t> prefix;

    void recompute_from(std::size_t start, const FiniteMonoid& M,
                        const std::vector<std::size_t>& assignment) {
        for (std::size_t i = start; i < plan->positions.size(); ++i)
            prefix[i + 1] = M.mul(prefix[i], assignment[plan->positions[i]]);
    }
    std::size_t value() const { return prefix.back(); }
};

}  // namespace

std::uint64_t satisfaction_cost(const FiniteMonoid& M, const Identity& id) {
    const std::vector<Variable> vars = id.variables();
    const std::uint64_t n = M.size();
    const std::uint64_t lhs = side_cost(plan_side(id.lhs, vars), vars.size(), n);
    const std::uint64_t rhs = side_cost(plan_side(id.rhs, vars), vars.size(), n);
    const std::uint64_t cap = static_cast<std::uint64_t>(-1);
    return lhs > cap - rhs ? cap : lhs + rhs;
}

SatisfactionResult satisfies(const FiniteMonoid& M, const Identity& id, std::uint64_t budget) {
    const std::uint64_t required = satisfaction_cost(M, id);
    if (required > budget) return {SatStatus::OverBudget, std::nullopt, required};

    const std::vector<Variable> vars = id.variables();
    const std::size_t k = vars.size();
    const std::size_t n = M.size();
    const SidePlan lhs_plan = plan_side(id.lhs, vars);
    const SidePlan rhs_plan = plan_side(id.rhs, vars);
    SideEval lhs{&lhs_plan, std::vector<std::size_t>(id.lhs.size() + 1, M.identity_index())};
    SideEval rhs{&rhs_plan, std::vector<std::size_t>(id.rhs.size() + 1, M.identity_index())};

    std::vector<std::size_t> assignment(k, 0);
    lhs.recompute_from(0, M, assignment);
    rhs.recompute_from(0, M, assignment);
    auto fail_here = [&]() {
        Counterexample ce;
        for (std::size_t j = 0; j < k; ++j) ce.assignment.emplace_back(vars[j], assignment[j]);
        ce.lhs_value = lhs.value();
        ce.rhs_value = rhs.value();
        return SatisfactionResult{SatStatus::Fails, std::move(ce), 0};
    };
    if (lhs.value() != rhs.value()) return fail_here();

    while (true) {
        // Odometer step, digit k-1 fastest; j ends as the leftmost changed.
        std::size_t j = k;
        while (j-- > 0) {
            if (++assignment[j] < n) break;
            assignment[j] = 0;
            if (j == 0) return {SatStatus::Holds, std::nullopt, 0};
        }
        if (k == 0 || (j == std::size_t(-1))) return {SatStatus::Holds, std::nullopt, 0};
        if (lhs_plan.restart[j] != kUnaffected) lhs.recompute_from(lhs_plan.restart[j], M, assignment);
        if (rhs_plan.restart[j] != kUnaffected) rhs.recompute_from(rhs_plan.restart[j], M, assignment);
        if (lhs.value() != rhs.value()) return fail_here();
    }
}

SystemSatisfactionResult satisfies_all(const FiniteMonoid& M, const IdentitySystem& sigma_set,
                                       std::uint64_t budget) {
    for (const auto& id : sigma_set) {
        SatisfactionResult res = satisfies(M, id, budget);
        if (res.status != SatStatus::Holds)
            return {res.status, id, std::move(res)};
    }
    return {};
}

std::string dump_monoid(const FiniteMonoid& M) {
    std::string out = fmt::format("elements: {}\n", M.size());
    for (std::size_t i = 0; i < M.size(); ++i) out += M.label(i) + "\n";
    for (std::size_t a = 0; a < M.size(); ++a) {
        for (std::size_t b = 0; b < M.size(); ++b) {
            if (b) out += ' ';
            out += fmt::format("{}", M.mul(a, b));
        }
        out += '\n';
    }
    return out;
}

FiniteMonoid load_monoid_dump(std::string_view text, std::string name) {
    std::istringstream in{std::string(text)};
    std::string header;
    if (!std::getline(in, header) || header.rfind("elements: ", 0) != 0)
        throw ParseError("expected header 'elements: <n>'", 0);
    std::size_t n = 0;
    try {
        n = std::stoul(header.substr(10));
    } catch (const std::exception&) {
        throw ParseError("bad element count in header", 10);
    }
    if (n == 0) throw ParseError("a monoid needs at least one element", 10);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!std::getline(in, labels[i]) || labels[i].empty())
            throw ParseError(fmt::format("missing label line {}", i + 1), 0);
    std::vector<std::size_t> table;
    table.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
        std::string line;
        if (!std::getline(in, line))
            throw ParseError(fmt::format("missing table row {}", row + 1), 0);
        std::istringstream cells(line);
        std::size_t cell = 0;
        while (cells >> cell) {
            if (cell >= n) throw ParseError("table entry out of range", 0);
            table.push_back(cell);
        }
        if (table.size() != (row + 1) * n)
            throw ParseError(fmt::format("table row {} has wrong width", row + 1), 0);
    }

    std::optional<std::size_t> identity;
    std::optional<std::size_t> zero;
    for (std::size_t c = 0; c < n; ++c) {
        bool is_identity = true;
        bool is_zero = true;
        for (std::size_t a = 0; a < n; ++a) {
            if (table[c * n + a] != a || table[a * n + c] != a) is_identity = false;
            if (table[c * n + a] != c || table[a * n + c] != c) is_zero = false;
        }
        if (is_identity && !identity) identity = c;
        if (is_zero && !zero && n > 1) zero = c;
    }
    if (!identity) throw ParseError("no two-sided identity element found", 0);
    return FiniteMonoid(std::move(name), std::move(labels), std::move(table), *identity, zero);
}

}  // namespace wordeq
