#include <doctest.h>

#include <algorithm>

#include "schurkit/verify.hpp"

using namespace schurkit;

namespace {

bool has_witness(const SuiteReport& report, const Partition& lambda, bool holds) {
    return std::any_of(report.witnesses.begin(), report.witnesses.end(),
                       [&](const Witness& w) { return w.partition == lambda && w.holds == holds; });
}

const SubReport* sub(const SuiteReport& report, const std::string& name) {
    for (const auto& s : report.subs)
        if (s.name == name)
            return &s;
    return nullptr;
}

} // namespace

TEST_CASE("theorem suites pass on the documented configurations") {
    {
        SimpleTable t(2, 2);
        CHECK(suite_thm_2good(2, 2, 10, t).pass());
    }
    {
        SimpleTable t(3, 3);
        const auto report = suite_thm_2good(3, 3, 8, t);
        CHECK(report.pass());
        CHECK(has_witness(report, Partition{2, 2, 2}, true));
    }
    {
        SimpleTable t(2, 3);
        const auto report = suite_thm_2good(2, 3, 12, t);
        CHECK(report.pass());
        CHECK(has_witness(report, Partition{6, 4, 2}, true));
    }
    {
        SimpleTable t(3, 3);
        const auto report = suite_thm_21special(3, 3, 10, t);
        CHECK(report.pass());
        CHECK(has_witness(report, Partition{2, 2, 2}, true));
    }
    {
        SimpleTable t(2, 3);
        CHECK(suite_thm_21special(2, 3, 8, t).pass());
    }
    {
        SimpleTable t(5, 2);
        CHECK(suite_thm_21special(5, 2, 10, t).pass());
    }
    for (const auto& [p, n, rmax] : std::vector<std::tuple<int, int, int>>{{3, 2, 8}, {2, 4, 6}, {5, 2, 10}}) {
        SimpleTable t(p, n);
        CHECK(suite_1special(p, n, rmax, t).pass());
    }
}

TEST_CASE("rows cover the union of predicted and observed sets") {
    SimpleTable t(2, 2);
    const auto report = suite_thm_2good(2, 2, 6, t);
    REQUIRE(!report.rows.empty());
    for (const auto& row : report.rows) {
        CHECK(row.degree == row.partition.degree());
        CHECK((row.in_theorem || row.in_oracle));
        CHECK(row.in_theorem == row.in_oracle);
    }
}

TEST_CASE("combinatorial suite") {
    const auto p3 = suite_combinatorial(3, 25);
    CHECK(p3.pass());
    for (const char* name : {"parse-uniqueness", "dagger-reciprocity", "row-removal", "full-first-row", "additivity", "piecewise",
                             "p-core-gate", "suitable-node-closure", "2special-standard", "partition-core"}) {
        const auto* s = sub(p3, name);
        REQUIRE_MESSAGE(s != nullptr, name);
        CHECK_FALSE(s->skipped);
        CHECK(s->checked > 0);
    }
    const auto p2 = suite_combinatorial(2, 30);
    CHECK(p2.pass());
    const auto* piecewise = sub(p2, "piecewise");
    REQUIRE(piecewise != nullptr);
    CHECK(piecewise->skipped);
    CHECK(piecewise->note == "skipped-by-precondition p>2");
    CHECK(suite_combinatorial(7, 20).pass());
}

TEST_CASE("oracle self-audit suite") {
    for (const auto& [p, n, rmax] : std::vector<std::tuple<int, int, int>>{{2, 2, 10}, {3, 3, 9}, {5, 2, 8}}) {
        SimpleTable t(p, n);
        const auto report = suite_oracle_self(p, n, rmax, t);
        CHECK_MESSAGE(report.pass(), "p=", p, " n=", n);
    }
}

TEST_CASE("a wrong simple character is reported with a counterexample") {
    SimpleTable t(5, 3);
    // L(3) with its (1,1,1) weight removed leaves a spurious factor L(1,1,1).
    SymChar fake = schur_char(Partition{3}, 3);
    fake.add_scaled(SymChar::from_coeffs(3, {{Partition{1, 1, 1}, 1}}), -1);
    t.publish(Partition{3}, fake);
    const auto report = suite_thm_2good(5, 3, 4, t);
    REQUIRE_FALSE(report.pass());
    CHECK(report.to_json(false)["verdict"] == "fail");
    const bool names_111 = std::any_of(report.discrepancies.begin(), report.discrepancies.end(),
                                       [](const Discrepancy& d) { return d.partition == Partition{1, 1, 1}; });
    CHECK(names_111);

    const auto audit = audit_table(t);
    REQUIRE_FALSE(audit.pass());
    const bool names_3 = std::any_of(audit.discrepancies.begin(), audit.discrepancies.end(),
                                     [](const Discrepancy& d) { return d.partition == Partition{3}; });
    CHECK(names_3);
}

TEST_CASE("reports are deterministic") {
    SimpleTable a(3, 2);
    SimpleTable b(3, 2);
    SimpleTable c(3, 2);
    const auto ra = suite_thm_21special(3, 2, 8, a);
    const auto rb = suite_thm_21special(3, 2, 8, b);
    CHECK(ra.to_json(false).dump() == rb.to_json(false).dump());
    // Parallel workers may compute a weight twice, so only the counters differ.
    auto ja = ra.to_json(false);
    auto jc = suite_thm_21special(3, 2, 8, c, 4).to_json(false);
    ja.erase("oracleStats");
    jc.erase("oracleStats");
    CHECK(ja == jc);
    CHECK(suite_combinatorial(5, 15).to_json(false).dump() == suite_combinatorial(5, 15).to_json(false).dump());
    CHECK_FALSE(ra.to_json(false).contains("elapsed"));
    CHECK(ra.to_json(true).contains("elapsed"));
}

TEST_CASE("rim-hook removal agrees with the abacus") {
    for (int p : {2, 3, 5})
        for (const auto& lambda : partitions_up_to(12)) {
            const auto ends = rim_hook_removals(lambda, p);
            REQUIRE(ends == std::vector<Partition>{p_core(lambda, p)});
        }
}

TEST_CASE("tiers and dispatch") {
    for (const auto& name : suite_names()) {
        CHECK_FALSE(tier_configs(name, Tier::Fast).empty());
        CHECK(tier_configs(name, Tier::Extended).size() >= tier_configs(name, Tier::Fast).size());
    }
    const auto fast = tier_configs("thm-2good", Tier::Fast);
    CHECK(fast.size() == 6);
    const auto report = run_suite("combinatorial", SuiteConfig{5, 1, 12}, nullptr);
    CHECK(report.suite == "combinatorial");
    CHECK(report.pass());
}
