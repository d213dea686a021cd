#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "relkin/scale_function.hpp"

using namespace relkin;

TEST_CASE("scale function forced to 1") {
    SUBCASE("single rest sample") {
        const std::vector<Velocity> samples{Velocity(0.0)};
        const ScaleVerdict v = solve_scale_function(samples);
        CHECK(v.consistent);
        CHECK(v.max_deviation == 0.0);
    }
    SUBCASE("single moving sample") {
        const std::vector<Velocity> samples{Velocity(0.6)};
        const ScaleVerdict v = solve_scale_function(samples);
        CHECK(v.consistent);
        CHECK(v.max_deviation <= 1e-12);
        CHECK(v.max_constraint_residual <= 1e-12);
    }
    SUBCASE("99 evenly spaced samples") {
        std::vector<Velocity> samples;
        for (int i = 0; i < 99; ++i) {
            samples.push_back(Velocity(-0.99 + i * (1.98 / 98.0)));
        }
        const ScaleVerdict v = solve_scale_function(samples);
        CHECK(v.consistent);
        CHECK(v.max_deviation <= 1e-12);
        CHECK(v.max_constraint_residual <= 1e-12);
    }
}

TEST_CASE("scale function rejects empty input") {
    CHECK_THROWS_AS(solve_scale_function({}), std::invalid_argument);
}
