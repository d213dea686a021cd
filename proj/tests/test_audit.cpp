#include <doctest.h>

#include "relkin/audit.hpp"

using namespace relkin::audit;

TEST_CASE("group audit passes its batteries") {
    const AuditReport report = group_audit(2000, 42);
    CHECK(report.all_pass());
    CHECK(report.seed == 42);
    CHECK(report.batteries.size() == 9);

    for (const auto& b : report.batteries) {
        INFO(b.name << " deviation " << b.max_deviation);
        CHECK(b.pass);
        if (b.name != "velocity-closure") {
            CHECK(b.max_deviation <= 1e-10);
        }
    }
}

TEST_CASE("group audit is reproducible from the seed") {
    const AuditReport a = group_audit(500, 7);
    const AuditReport b = group_audit(500, 7);
    REQUIRE(a.batteries.size() == b.batteries.size());
    for (std::size_t i = 0; i < a.batteries.size(); ++i) {
        CHECK(a.batteries[i].max_deviation == b.batteries[i].max_deviation);
    }

    // A different seed draws different trials.
    const AuditReport c = group_audit(500, 8);
    bool any_different = false;
    for (std::size_t i = 0; i < a.batteries.size(); ++i) {
        any_different |=
            a.batteries[i].max_deviation != c.batteries[i].max_deviation;
    }
    CHECK(any_different);
}

TEST_CASE("degenerate single-sample audit is valid") {
    const AuditReport report = group_audit(1, 1);
    CHECK(report.all_pass());
}

TEST_CASE("covariance audit") {
    const AuditReport report = covariance_audit(1000, 42);
    CHECK(report.all_pass());
    REQUIRE(report.batteries.size() == 1);
    CHECK(report.batteries[0].max_deviation <= 1e-12);
    CHECK(report.batteries[0].trials == 1000);
}

TEST_CASE("equivalence grid audit") {
    const AuditReport report = equivalence_grid_audit(500, 42);
    CHECK(report.all_pass());
    REQUIRE(report.batteries.size() == 2);
    CHECK(report.batteries[0].name == "observable-agreement");
    CHECK(report.batteries[0].max_deviation <= 1e-10);
    CHECK(report.batteries[1].name == "truetime-asymmetry-min");
    CHECK(report.batteries[1].max_deviation > 1e-6);
}
