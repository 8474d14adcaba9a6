#include <doctest.h>

#include <json.hpp>

#include "wordeq/verify.hpp"

using namespace wordeq;

namespace {

const SearchLimits kAuto{0, 0};

std::size_t count_status(const VerificationReport& rep, CaseStatus s) {
    std::size_t n = 0;
    for (const auto& c : rep.cases) n += c.status == s ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("report outcomes aggregate with fail dominating") {
    VerificationReport rep;
    rep.tag = "t";
    CHECK(rep.overall() == CaseStatus::Pass);
    rep.add("a", true);
    CHECK(rep.overall() == CaseStatus::Pass);
    rep.add_inconclusive("b", "limit");
    CHECK(rep.overall() == CaseStatus::Inconclusive);
    CHECK(rep.limits_hit);
    rep.add("c", false, "boom");
    CHECK(rep.overall() == CaseStatus::Fail);
    CHECK(!rep.pass());
}

TEST_CASE("report text is stable and timing is opt-in") {
    VerificationReport rep;
    rep.tag = "demo";
    rep.params = {{"n", 3}};
    rep.add("works", true);
    rep.wall_ms = 1234;
    CHECK(rep.to_text() == "demo n=3\n  ok   works\noverall: pass (1 cases)\n");
    CHECK(rep.to_text(true) == "demo n=3\n  ok   works\noverall: pass (1 cases) in 1234 ms\n");
    CHECK(rep.to_text() == rep.to_text());

    const auto doc = nlohmann::json::parse(rep.to_json());
    CHECK(doc["tag"] == "demo");
    CHECK(doc["params"]["n"] == 3);
    CHECK(doc["overall"] == "pass");
    CHECK(!doc.contains("wall_ms"));
    CHECK(nlohmann::json::parse(rep.to_json(true))["wall_ms"] == 1234);
}

TEST_CASE("fiber protocol over the three-word ground set") {
    const VerificationReport rep = verify_phi(3, kAuto);
    CHECK(rep.pass());
    CHECK(rep.cases.size() == 5 * 3 + 3);  // fibers + system checks
    CHECK(!rep.limits_hit);
    CHECK(rep.to_text() == verify_phi(3, kAuto).to_text());  // deterministic
    CHECK_THROWS_AS(verify_phi(5, kAuto), std::invalid_argument);
}

TEST_CASE("fiber protocol fails under starved limits") {
    // A two-word cap cannot complete the closures of the coarser partitions.
    const VerificationReport rep = verify_phi(3, SearchLimits{0, 1});
    CHECK(rep.overall() == CaseStatus::Inconclusive);
    CHECK(rep.limits_hit);
    CHECK(count_status(rep, CaseStatus::Inconclusive) > 0);
}

TEST_CASE("fiber protocol over the cube-free ground set") {
    const VerificationReport rep = verify_lambda(2, kAuto);
    CHECK(rep.pass());
    CHECK(rep.cases.size() == 2 * 2 + 3);
    CHECK_THROWS_AS(verify_lambda(4, kAuto), std::invalid_argument);
}

TEST_CASE("case equivalences at the smallest size") {
    const VerificationReport rep = verify_case_equivalences(3, kAuto);
    CHECK(rep.pass());
    CHECK(rep.cases.size() == 8);
    for (const auto& c : rep.cases) {
        CAPTURE(c.name);
        CHECK(c.status == CaseStatus::Pass);
    }
    CHECK_THROWS_AS(verify_case_equivalences(6, kAuto), std::invalid_argument);
}

TEST_CASE("bounded isoterm sweep passes and respects its budget") {
    const VerificationReport quick = verify_isoterm_lemmas(IsotermFamily::A, 3, 2);
    CHECK(quick.pass());
    CHECK(!quick.limits_hit);

    // Starving the budget turns monoid-side checks inconclusive, never failed.
    const VerificationReport starved = verify_isoterm_lemmas(IsotermFamily::A, 3, 2, 10);
    CHECK(starved.overall() == CaseStatus::Inconclusive);
    CHECK(starved.limits_hit);
    CHECK(count_status(starved, CaseStatus::Fail) == 0);

    CHECK_THROWS_AS(verify_isoterm_lemmas(IsotermFamily::A, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_isoterm_lemmas(IsotermFamily::C, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_isoterm_lemmas(IsotermFamily::A, 3, 9), std::invalid_argument);
}

TEST_CASE("cube-free sweep at the smallest size") {
    const VerificationReport rep = verify_isoterm_lemmas(IsotermFamily::C, 2, 2);
    CHECK(rep.pass());
}

TEST_CASE("join containment harness") {
    const VerificationReport rep = verify_em_join(2, 2);
    CHECK(rep.pass());
    bool saw_containment = false;
    for (const auto& c : rep.cases) saw_containment |= c.name.rfind("M(", 0) == 0;
    CHECK(saw_containment);
    CHECK_THROWS_AS(verify_em_join(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_em_join(2, 0), std::invalid_argument);
}

TEST_CASE("profile uniqueness harness") {
    const VerificationReport rep = verify_tm1(2, 2);
    CHECK(rep.pass());
    CHECK(rep.cases.size() == 1 + 2);  // sweep + one uniqueness case per r
    CHECK_THROWS_AS(verify_tm1(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_tm1(2, 4), std::invalid_argument);
}
