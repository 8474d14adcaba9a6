#include "wordeq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "wordeq/families.hpp"
#include "wordeq/lattices.hpp"
#include "wordeq/partitions.hpp"

namespace wordeq {

CaseStatus VerificationReport::overall() const {
    bool inconclusive = limits_hit;
    for (const auto& c : cases) {
        if (c.status == CaseStatus::Fail) return CaseStatus::Fail;
        if (c.status == CaseStatus::Inconclusive) inconclusive = true;
    }
    return inconclusive ? CaseStatus::Inconclusive : CaseStatus::Pass;
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
    cases.push_back({std::move(name), ok ? CaseStatus::Pass : CaseStatus::Fail,
                     std::move(detail)});
}

void VerificationReport::add_inconclusive(std::string name, std::string detail) {
    cases.push_back({std::move(name), CaseStatus::Inconclusive, std::move(detail)});
    limits_hit = true;
}

namespace {

const char* status_word(CaseStatus s) {
    switch (s) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Fail: return "fail";
        default: return "inconclusive";
    }
}

}  // namespace

std::string VerificationReport::to_text(bool with_timing) const {
    std::string out = tag;
    for (const auto& [key, value] : params) out += fmt::format(" {}={}", key, value);
    out += '\n';
    for (const auto& c : cases) {
        const char* mark = c.status == CaseStatus::Pass ? "ok  "
                           : c.status == CaseStatus::Fail ? "FAIL"
                                                          : "??  ";
        out += fmt::format("  {} {}{}{}\n", mark, c.name, c.detail.empty() ? "" : ": ",
                           c.detail);
    }
    out += fmt::format("overall: {} ({} cases{})", status_word(overall()), cases.size(),
                       limits_hit ? ", limits hit" : "");
    if (with_timing) out += fmt::format(" in {} ms", wall_ms);
    out += '\n';
    return out;
}

std::string VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json doc;
    doc["tag"] = tag;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) p[key] = value;
    doc["params"] = std::move(p);
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["status"] = status_word(c.status);
        entry["detail"] = c.detail;
        cs.push_back(std::move(entry));
    }
    doc["cases"] = std::move(cs);
    doc["limits_hit"] = limits_hit;
    doc["overall"] = status_word(overall());
    if (with_timing) doc["wall_ms"] = wall_ms;
    return doc.dump(2) + "\n";
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string word_set_text(const std::set<Word>& words) {
    std::string out = "{";
    for (const auto& w : words) out += fmt::format("{}{}", out.size() > 1 ? ", " : "", format_word(w));
    return out + "}";
}

// Shared fiber protocol for verify_phi / verify_lambda: closures of the
// ground words under base ∪ Id(π) must reproduce the blocks of π, and the
// resulting fiber systems must determine π and reverse the refinement
// order.
VerificationReport fiber_protocol(std::string tag, std::size_t n, std::vector<Word> ground,
                                  const IdentitySystem& base, const SearchLimits& limits) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.tag = std::move(tag);
    rep.params = {{"n", static_cast<std::int64_t>(n)}};

    const std::vector<Partition> partitions = enumerate_partitions(ground);
    std::vector<std::vector<std::set<Word>>> fibers(
        partitions.size(), std::vector<std::set<Word>>(ground.size()));
    bool all_complete = true;

    for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
        const Partition& part = partitions[pi];
        const IdentitySystem basis =
            merge(base, id_of_partition(part), base.name() + "+Id(pi)");
        for (std::size_t i = 0; i < ground.size(); ++i) {
            const std::string name =
                fmt::format("fiber pi={} u={}", part.str(), format_word(ground[i]));
            const ClosureResult closed =
                closure(ground[i], basis, resolve_limits(limits, ground[i]));
            std::set<Word>& fiber = fibers[pi][i];
            for (const auto& w : ground)
                if (closed.words.count(w)) fiber.insert(w);
            if (!closed.complete) {
                all_complete = false;
                rep.add_inconclusive(
                    name, fmt::format("closure truncated at {} visited words",
                                      closed.frontier_truncated_at.value_or(0)));
                continue;
            }
            std::set<Word> block;
            for (std::size_t j = 0; j < ground.size(); ++j)
                if (part.same_block(i, j)) block.insert(ground[j]);
            rep.add(name, fiber == block,
                    fiber == block ? ""
                                   : fmt::format("closure∩ground = {}, block = {}",
                                                 word_set_text(fiber), word_set_text(block)));
        }
    }

    if (!all_complete) {
        rep.add_inconclusive("injectivity", "skipped: some fiber incomplete");
        rep.add_inconclusive("order-reversal", "skipped: some fiber incomplete");
        rep.add_inconclusive("strict-reversal-witnesses", "skipped: some fiber incomplete");
        rep.wall_ms = ms_since(start);
        return rep;
    }

    bool injective = true;
    std::string collision;
    for (std::size_t a = 0; a < partitions.size() && injective; ++a)
        for (std::size_t b = a + 1; b < partitions.size() && injective; ++b)
            if (fibers[a] == fibers[b]) {
                injective = false;
                collision = fmt::format("pi={} and pi={} give identical fiber systems",
                                        partitions[a].str(), partitions[b].str());
            }
    rep.add("injectivity", injective, collision);

    bool reversal = true;
    std::string reversal_detail;
    for (std::size_t a = 0; a < partitions.size() && reversal; ++a)
        for (std::size_t b = 0; b < partitions.size() && reversal; ++b) {
            bool contained = true;
            for (std::size_t i = 0; i < ground.size() && contained; ++i)
                contained = std::includes(fibers[b][i].begin(), fibers[b][i].end(),
                                          fibers[a][i].begin(), fibers[a][i].end());
            if (contained != is_finer(partitions[a], partitions[b])) {
                reversal = false;
                reversal_detail =
                    fmt::format("pi={} vs pi={}: fiber containment {} refinement",
                                partitions[a].str(), partitions[b].str(),
                                contained ? "without" : "missing despite");
            }
        }
    rep.add("order-reversal", reversal, reversal_detail);

    bool witnesses = true;
    std::string witness_detail;
    for (std::size_t a = 0; a < partitions.size() && witnesses; ++a)
        for (std::size_t b = 0; b < partitions.size() && witnesses; ++b) {
            if (a == b || !is_finer(partitions[a], partitions[b])) continue;
            // Strict refinement: some pair of ρ-equivalent words must be
            // separated by the finer π's fibers.
            bool found = false;
            for (std::size_t i = 0; i < ground.size() && !found; ++i)
                for (std::size_t j = 0; j < ground.size() && !found; ++j)
                    found = partitions[b].same_block(i, j) && !fibers[a][i].count(ground[j]);
            if (!found) {
                witnesses = false;
                witness_detail = fmt::format("no separating pair for pi={} < pi={}",
                                             partitions[a].str(), partitions[b].str());
            }
        }
    rep.add("strict-reversal-witnesses", witnesses, witness_detail);

    rep.wall_ms = ms_since(start);
    return rep;
}

}  // namespace

VerificationReport verify_phi(std::size_t n, const SearchLimits& limits) {
    if (n != 3 && n != 4) throw std::invalid_argument("verify_phi supports n in {3, 4}");
    std::vector<Word> ground;
    for (const auto& w : words_B(n)) ground.push_back(w.to_word());
    const IdentitySystem base = merge(ids_O(), ids_A(n), fmt::format("O+A{}", n));
    return fiber_protocol("phi", n, std::move(ground), base, limits);
}

VerificationReport verify_lambda(std::size_t n, const SearchLimits& limits) {
    if (n != 2 && n != 3) throw std::invalid_argument("verify_lambda supports n in {2, 3}");
    std::vector<Word> ground;
    for (const auto& w : words_D(n)) ground.push_back(w.to_word());
    const IdentitySystem base = merge(ids_O(), ids_C(n), fmt::format("O+C{}", n));
    return fiber_protocol("lambda", n, std::move(ground), base, limits);
}

namespace {

// One (word, basis) entry of the isoterm sweeps: the deduction side and
// the monoid side must agree that w is an isoterm.
void isoterm_case(VerificationReport& rep, const Word& w, const IdentitySystem& basis,
                  std::uint64_t budget) {
    const std::string name = fmt::format("isoterm w={} basis={}", format_word(w), basis.name());
    const bool ded = is_isoterm(w, basis);
    const SystemSatisfactionResult mon = satisfies_all(factor_monoid(w), basis, budget);
    if (mon.status == SatStatus::OverBudget) {
        rep.add_inconclusive(name, fmt::format("monoid side needs {} lookups",
                                               mon.detail.required_lookups));
        return;
    }
    std::string detail;
    if (!ded) detail = "one-step rewrite exists";
    if (!mon.holds()) {
        if (!detail.empty()) detail += "; ";
        detail += fmt::format("M(w) violates {}", format_identity(*mon.culprit));
    }
    rep.add(name, ded && mon.holds(), detail);
}

}  // namespace

VerificationReport verify_isoterm_lemmas(IsotermFamily family, std::size_t n,
                                         std::size_t r_max, std::uint64_t budget) {
    if (r_max > 4) throw std::invalid_argument("isoterm sweeps are capped at r_max <= 4");
    const auto start = Clock::now();
    VerificationReport rep;
    rep.params = {{"n", static_cast<std::int64_t>(n)},
                  {"r_max", static_cast<std::int64_t>(r_max)}};

    std::size_t outer_sum = 0, inner_sum = 0;
    IdentitySystem outer_basis, inner_basis;
    bool need_cube_free = false;
    if (family == IsotermFamily::A) {
        if (n != 3 && n != 4)
            throw std::invalid_argument("family A isoterm sweep supports n in {3, 4}");
        rep.tag = "isoterms-A";
        outer_sum = n - 1;
        inner_sum = n - 2;
        outer_basis = merge(ids_O(), ids_A(n), fmt::format("O+A{}", n));
        inner_basis = merge(outer_basis, ids_B(n), fmt::format("O+A{}+B{}", n, n));
    } else {
        if (n != 2 && n != 3)
            throw std::invalid_argument("family C isoterm sweep supports n in {2, 3}");
        rep.tag = "isoterms-C";
        need_cube_free = true;
        outer_sum = 2 * n - 1;
        inner_sum = 2 * n - 2;
        outer_basis = merge(ids_O(), ids_C(n), fmt::format("O+C{}", n));
        inner_basis = merge(outer_basis, ids_D(n), fmt::format("O+C{}+D{}", n, n));
    }

    for (const RigidWord& rigid : enumerate_rigid_words(r_max, outer_sum)) {
        if (need_cube_free && !rigid.cube_free()) continue;
        const Word w = rigid.to_word();
        isoterm_case(rep, w, outer_basis, budget);
        if (rigid.exponent_sum() <= inner_sum) isoterm_case(rep, w, inner_basis, budget);
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

namespace {

Word xs(std::size_t count) {
    return Word(std::vector<Variable>(count, Variable("x")));
}

Word letter(const char* name) { return Word(std::vector<Variable>{Variable(name)}); }

bool member_of(const Identity& id, const std::set<Identity>& keys) {
    return keys.count(canonical_unordered(id)) != 0;
}

}  // namespace

VerificationReport verify_case_equivalences(std::size_t n, const SearchLimits& limits) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("case equivalences support n in {3, 4, 5}");
    const auto start = Clock::now();
    VerificationReport rep;
    rep.tag = "cases";
    rep.params = {{"n", static_cast<std::int64_t>(n)}};

    std::set<Identity> b_keys;
    for (const auto& id : ids_B(n)) b_keys.insert(canonical_unordered(id));

    const Word h = letter("h"), k = letter("k"), t = letter("t");
    const std::size_t e = n - 1;  // shared exponent sum on both sides

    rep.add("case-i", member_of(Identity{xs(e) * h, h * xs(e)}, b_keys));
    for (std::size_t p = 1; p + 1 <= e; ++p) {
        const std::size_t q = e - p;
        rep.add(fmt::format("case-ii p={} q={}", p, q),
                member_of(Identity{xs(p) * h * xs(q), xs(e) * h}, b_keys));
        for (std::size_t pp = 1; pp + 1 <= e; ++pp) {
            if (pp == p) continue;  // trivial instantiation
            const std::size_t qq = e - pp;
            rep.add(fmt::format("case-iii p={} q={} p'={} q'={}", p, q, pp, qq),
                    member_of(Identity{xs(p) * h * xs(q), xs(pp) * h * xs(qq)}, b_keys));
        }
    }

    struct Shape {
        const char* name;
        std::size_t chain;    // length of the displayed deduction
        bool uses_primed;     // does the shape mention p', q'?
        // Builds (case identity, displayed equivalent set) at (p,q,p',q').
        std::function<std::pair<Identity, std::vector<Identity>>(
            std::size_t, std::size_t, std::size_t, std::size_t)>
            build;
    };
    const std::vector<Shape> shapes = {
        {"iv", 3, true,
         [&](std::size_t p, std::size_t q, std::size_t pp, std::size_t qq) {
             return std::make_pair(
                 Identity{xs(p) * h * xs(q) * k, xs(pp) * h * k * xs(qq)},
                 std::vector<Identity>{{xs(p) * h * xs(q), xs(pp) * h * xs(qq)},
                                       {xs(e) * k, xs(pp) * k * xs(qq)}});
         }},
        {"v", 2, true,
         [&](std::size_t p, std::size_t q, std::size_t pp, std::size_t qq) {
             return std::make_pair(
                 Identity{xs(p) * h * xs(q) * k, h * xs(pp) * k * xs(qq)},
                 std::vector<Identity>{{xs(p) * h * xs(q), h * xs(e)},
                                       {xs(e) * k, xs(pp) * k * xs(qq)}});
         }},
        {"vi", 2, false,
         [&](std::size_t p, std::size_t q, std::size_t, std::size_t) {
             return std::make_pair(
                 Identity{xs(p) * h * xs(q) * k, h * k * xs(e)},
                 std::vector<Identity>{{xs(p) * h * xs(q), h * xs(e)},
                                       {xs(e) * k, k * xs(e)}});
         }},
        {"vii", 3, true,
         [&](std::size_t p, std::size_t q, std::size_t pp, std::size_t qq) {
             return std::make_pair(
                 Identity{xs(p) * h * xs(q) * k * t, h * k * xs(pp) * t * xs(qq)},
                 std::vector<Identity>{{xs(p) * h * xs(q), h * xs(e)},
                                       {xs(e) * k, k * xs(e)},
                                       {xs(e) * t, xs(pp) * t * xs(qq)}});
         }},
        {"viii", 5, true,
         [&](std::size_t p, std::size_t q, std::size_t pp, std::size_t qq) {
             return std::make_pair(
                 Identity{xs(p) * h * k * xs(q) * t, h * xs(pp) * k * t * xs(qq)},
                 std::vector<Identity>{{xs(p) * h * xs(q), h * xs(e)},
                                       {xs(p) * k * xs(q), xs(pp) * k * xs(qq)},
                                       {xs(e) * t, xs(pp) * t * xs(qq)}});
         }},
        {"ix", 5, true,
         [&](std::size_t p, std::size_t q, std::size_t pp, std::size_t qq) {
             return std::make_pair(
                 Identity{xs(p) * h * k * t * xs(q), h * xs(pp) * k * xs(qq) * t},
                 std::vector<Identity>{{xs(p) * h * xs(q), h * xs(e)},
                                       {xs(p) * k * xs(q), xs(pp) * k * xs(qq)},
                                       {xs(p) * t * xs(q), xs(e) * t}});
         }},
    };

    for (const Shape& shape : shapes) {
        for (std::size_t p = 1; p + 1 <= e; ++p) {
            const std::size_t pp_hi = shape.uses_primed ? e - 1 : 1;
            for (std::size_t pp = 1; pp <= pp_hi; ++pp) {
                const std::size_t q = e - p, qq = e - pp;
                auto [case_id, displayed] = shape.build(p, q, pp, qq);
                const std::string name =
                    shape.uses_primed
                        ? fmt::format("case-{} p={} q={} p'={} q'={}", shape.name, p, q, pp, qq)
                        : fmt::format("case-{} p={} q={}", shape.name, p, q);
                IdentitySystem sigma1(fmt::format("({})", shape.name));
                sigma1.add(case_id);
                IdentitySystem sigma2("displayed");
                for (const auto& id : displayed) sigma2.add(id);
                const BasisComparison cmp = bases_equivalent(
                    sigma1, sigma2, IdentitySystem("empty"), resolve_limits(limits, case_id));
                if (cmp.status != EquivalenceStatus::Equivalent) {
                    rep.add_inconclusive(
                        name, fmt::format("no proof of {} within limits",
                                          format_identity(cmp.unproved.value_or(case_id))));
                    continue;
                }
                // proofs[0] is the case identity deduced from the displayed
                // set; its trace may not exceed the displayed chain length.
                const std::size_t found = cmp.proofs.front().second.length();
                rep.add(name, found <= shape.chain,
                        found <= shape.chain
                            ? ""
                            : fmt::format("trace has {} steps, displayed chain {}", found,
                                          shape.chain));
            }
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

VerificationReport verify_em_join(std::size_t m, std::size_t r_max, std::uint64_t budget) {
    if (m != 2 && m != 3) throw std::invalid_argument("verify_em_join supports m in {2, 3}");
    if (r_max < 1 || r_max > 3)
        throw std::invalid_argument("verify_em_join supports 1 <= r_max <= 3");
    const auto start = Clock::now();
    VerificationReport rep;
    rep.tag = "em-join";
    rep.params = {{"m", static_cast<std::int64_t>(m)},
                  {"r_max", static_cast<std::int64_t>(r_max)}};

    const IdentitySystem basis = merge(ids_O(), ids_E(m), fmt::format("O+E{}", m));
    for (std::size_t r = 1; r <= r_max; ++r) {
        const Word w = word_w(m, r).to_word();
        const std::string name = fmt::format("M({}) in E{}", format_word(w), m);
        const SystemSatisfactionResult mon = satisfies_all(factor_monoid(w), basis, budget);
        if (mon.status == SatStatus::OverBudget) {
            rep.add_inconclusive(name, fmt::format("needs {} lookups",
                                                   mon.detail.required_lookups));
        } else {
            rep.add(name, mon.holds(),
                    mon.holds() ? ""
                                : fmt::format("violates {}", format_identity(*mon.culprit)));
        }
    }

    // Every m-free rigid word with r <= r_max separators (their exponent
    // sums are below (m-1)(r_max+1)+1 automatically) survives one-step
    // rewriting; rigid words with an exponent in {m, m+1} do not.
    for (const RigidWord& rigid : enumerate_rigid_words(r_max, (m - 1) * (r_max + 1))) {
        if (!rigid.m_free(m)) continue;
        const Word w = rigid.to_word();
        const bool ok = is_isoterm(w, basis);
        rep.add(fmt::format("{}-free isoterm w={}", m, format_word(w)), ok,
                ok ? "" : "one-step rewrite exists");
    }
    for (const RigidWord& rigid : enumerate_rigid_words(r_max, m + 1)) {
        if (rigid.m_free(m)) continue;
        const Word w = rigid.to_word();
        const bool ok = !is_isoterm(w, basis);
        rep.add(fmt::format("non-{}-free rewrites w={}", m, format_word(w)), ok,
                ok ? "" : "no one-step rewrite found");
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

namespace {

// All words over {x, y} of length <= max_len, shortest first.
std::vector<Word> xy_words(std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i)
            for (const char* name : {"x", "y"}) {
                Word w = out[i];
                w.push_back(Variable(name));
                out.push_back(std::move(w));
            }
        level_start = level_end;
    }
    return out;
}

}  // namespace

VerificationReport verify_tm1(std::size_t m, std::size_t r_max) {
    if (m != 2 && m != 3) throw std::invalid_argument("verify_tm1 supports m in {2, 3}");
    if (r_max < 1 || r_max > 3)
        throw std::invalid_argument("verify_tm1 supports 1 <= r_max <= 3");
    const auto start = Clock::now();
    VerificationReport rep;
    rep.tag = "tm1";
    rep.params = {{"m", static_cast<std::int64_t>(m)},
                  {"r_max", static_cast<std::int64_t>(r_max)}};

    const Word xy = letter("x") * letter("y");
    std::size_t candidates = 0;
    std::string survivor;
    for (const Word& v : xy_words(2 * m)) {
        if (v == xy) continue;
        ++candidates;
        if (tm1_satisfies(m, Identity{xy, v})) {
            survivor = format_word(v);
            break;
        }
    }
    rep.add(fmt::format("xy-isoterm sweep |v|<=2m over {} candidates", candidates),
            survivor.empty(),
            survivor.empty() ? "" : fmt::format("profile test cannot separate xy from {}",
                                                survivor));

    for (std::size_t r = 1; r <= r_max; ++r) {
        const RigidWord target = word_w(m, r);
        const Word u = target.to_word();
        const std::size_t sum_cap = 2 * (m - 1) * (r + 1);
        std::size_t checked = 0;
        std::string wrong;
        // Exponent vectors with r+1 digits, each at most m, sum <= cap.
        std::vector<std::size_t> exps(r + 1, 0);
        bool exhausted = false;
        while (!exhausted && wrong.empty()) {
            std::size_t sum = 0;
            for (const std::size_t e : exps) sum += e;
            if (sum <= sum_cap) {
                ++checked;
                const RigidWord candidate(exps);
                const bool same = exps == target.exponents;
                const bool accepted = tm1_satisfies(m, Identity{u, candidate.to_word()});
                if (accepted != same)
                    wrong = fmt::format(
                        "{} {} the profile test", format_word(candidate.to_word()),
                        accepted ? "survives" : "is wrongly rejected by");
            }
            std::size_t i = exps.size();
            while (i-- > 0) {
                if (exps[i] < m) {
                    ++exps[i];
                    break;
                }
                exps[i] = 0;
                if (i == 0) exhausted = true;
            }
        }
        rep.add(fmt::format("uniqueness r={} over {} candidates", r, checked), wrong.empty(),
                wrong);
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

}  // namespace wordeq
