#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "relkin/boost.hpp"
#include "relkin/event.hpp"
#include "relkin/rng.hpp"
#include "relkin/velocity.hpp"

using namespace relkin;

namespace {

// Independent route for composition checks: 2x2 matrix of the (t, x) block.
std::array<double, 4> boost_matrix(double eps, double scale) {
    const double kl = scale / std::sqrt(1.0 - eps * eps);
    return {kl, -kl * eps, -kl * eps, kl};
}

std::array<double, 4> matmul(const std::array<double, 4>& a,
                             const std::array<double, 4>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

TEST_CASE("velocity domain") {
    CHECK(Velocity(0.0).value() == 0.0);
    CHECK(Velocity(0.999999).value() == doctest::Approx(0.999999));
    CHECK_THROWS_AS(Velocity(1.0), std::domain_error);
    CHECK_THROWS_AS(Velocity(-1.0), std::domain_error);
    CHECK_THROWS_AS(Velocity(1.5), std::domain_error);
    CHECK_THROWS_AS(Velocity(std::nan("")), std::domain_error);
}

TEST_CASE("gamma values") {
    CHECK(gamma(Velocity(0.0)) == 1.0);
    // 1/sqrt(1 - 0.36) = 1/0.8
    CHECK(gamma(Velocity(0.6)) == doctest::Approx(1.25).epsilon(1e-14));
    // 1/sqrt(0.36) = 5/3
    CHECK(gamma(Velocity(0.8)) ==
          doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(gamma(Velocity(-0.6)) == gamma(Velocity(0.6)));
}

TEST_CASE("gamma identity over random draws") {
    rng::Engine eng(7);
    for (int i = 0; i < 1000; ++i) {
        const double e = rng::uniform(eng, -0.99, 0.99);
        CHECK(std::abs(gamma(Velocity(e)) * std::sqrt(1.0 - e * e) - 1.0) <=
              1e-12);
        CHECK(gamma(Velocity(e)) >= 1.0);
    }
}

TEST_CASE("boost_apply known values") {
    SUBCASE("identity boost leaves coordinates unchanged") {
        const Event e{3.0, 2.0, 1.0, 0.0, "K"};
        const Event out = boost_apply(Boost{}, e);
        CHECK(out.t == 3.0);
        CHECK(out.x == 2.0);
        CHECK(out.y == 1.0);
        CHECK(out.z == 0.0);
        CHECK(out.frame == "K'");
    }
    SUBCASE("eps 0.6 on the unit spatial event") {
        // k = 1.25: t' = k(0 - 0.6) = -0.75, x' = k(1 - 0) = 1.25
        const Event out =
            boost_apply(Boost(Velocity(0.6)), Event{0.0, 1.0, 0.0, 0.0, "K"});
        CHECK(out.t == doctest::Approx(-0.75).epsilon(1e-14));
        CHECK(out.x == doctest::Approx(1.25).epsilon(1e-14));
        CHECK(out.y == 0.0);
        CHECK(out.z == 0.0);
    }
    SUBCASE("scale 2 doubles every output row") {
        const Event out = boost_apply(Boost(Velocity(0.6), 2.0),
                                      Event{0.0, 1.0, 1.0, 0.0, "K"});
        CHECK(out.t == doctest::Approx(-1.5).epsilon(1e-14));
        CHECK(out.x == doctest::Approx(2.5).epsilon(1e-14));
        CHECK(out.y == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(out.z == 0.0);
    }
}

TEST_CASE("boost scale domain") {
    CHECK_THROWS_AS(Boost(Velocity(0.1), 0.0), std::domain_error);
    CHECK_THROWS_AS(Boost(Velocity(0.1), -2.0), std::domain_error);
}

TEST_CASE("boost_compose matches the matrix route") {
    SUBCASE("two half-speed boosts") {
        const Boost c =
            boost_compose(Boost(Velocity(0.5)), Boost(Velocity(0.5)));
        CHECK(c.velocity().value() == doctest::Approx(0.8).epsilon(1e-14));
        CHECK(c.scale() == 1.0);

        const auto direct = boost_matrix(c.velocity().value(), c.scale());
        const auto chained =
            matmul(boost_matrix(0.5, 1.0), boost_matrix(0.5, 1.0));
        for (int i = 0; i < 4; ++i) {
            CHECK(direct[static_cast<std::size_t>(i)] ==
                  doctest::Approx(chained[static_cast<std::size_t>(i)])
                      .epsilon(1e-12));
        }
    }
    SUBCASE("inverse pair gives the identity") {
        const Boost c = boost_compose(Boost(Velocity(0.7), 3.0),
                                      Boost(Velocity(-0.7), 1.0 / 3.0));
        CHECK(std::abs(c.velocity().value()) <= 1e-15);
        CHECK(c.scale() == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("pure dilation leaves the velocity alone") {
        const Boost c =
            boost_compose(Boost(Velocity(0.6)), Boost(Velocity(0.0), 3.0));
        CHECK(c.velocity().value() == 0.6);
        CHECK(c.scale() == 3.0);
    }
}

TEST_CASE("boost_compose order convention: first argument acts first") {
    rng::Engine eng(11);
    for (int i = 0; i < 200; ++i) {
        const Boost b1(Velocity(rng::uniform(eng, -0.9, 0.9)),
                       rng::uniform(eng, 0.1, 10.0));
        const Boost b2(Velocity(rng::uniform(eng, -0.9, 0.9)),
                       rng::uniform(eng, 0.1, 10.0));
        const Event e{rng::uniform(eng, -5, 5), rng::uniform(eng, -5, 5),
                      rng::uniform(eng, -5, 5), rng::uniform(eng, -5, 5), "K"};
        const Event chained = boost_apply(b2, boost_apply(b1, e));
        const Event direct = boost_apply(boost_compose(b1, b2), e);
        for (const auto& [a, b] :
             {std::pair{chained.t, direct.t}, std::pair{chained.x, direct.x},
              std::pair{chained.y, direct.y},
              std::pair{chained.z, direct.z}}) {
            CHECK(std::abs(a - b) <=
                  1e-10 * std::max({1.0, std::abs(a), std::abs(b)}));
        }
    }
}

TEST_CASE("boost_inverse") {
    const Boost b(Velocity(0.5), 2.0);
    const Boost inv = boost_inverse(b);
    CHECK(inv.velocity().value() == -0.5);
    CHECK(inv.scale() == 0.5);

    const Boost id = boost_compose(b, inv);
    CHECK(std::abs(id.velocity().value()) <= 1e-15);
    CHECK(id.scale() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(boost_inverse(Boost{}).velocity().value() == 0.0);
    CHECK(boost_inverse(Boost(Velocity(0.6))).velocity().value() == -0.6);
}

TEST_CASE("compose_velocities") {
    CHECK(compose_velocities(Velocity(0.5), Velocity(0.5)).value() ==
          doctest::Approx(0.8).epsilon(1e-14));
    CHECK(compose_velocities(Velocity(0.3), Velocity(0.0)).value() == 0.3);
    // 1.8/1.81, still sub-luminal
    CHECK(compose_velocities(Velocity(0.9), Velocity(0.9)).value() ==
          doctest::Approx(1.8 / 1.81).epsilon(1e-14));

    rng::Engine eng(3);
    for (int i = 0; i < 2000; ++i) {
        const Velocity a(rng::uniform(eng, -0.999, 0.999));
        const Velocity b(rng::uniform(eng, -0.999, 0.999));
        CHECK(std::abs(compose_velocities(a, b).value()) < 1.0);
    }
}

TEST_CASE("interval values and invariance") {
    CHECK(interval(Event{1.0, 1.0, 0.0, 0.0, "K"}) == 0.0);
    CHECK(interval(Event{2.0, 0.0, 0.0, 0.0, "K"}) == 4.0);

    // The boosted unit spatial event keeps its spacelike interval.
    const Event e{0.0, 1.0, 0.0, 0.0, "K"};
    const Event boosted = boost_apply(Boost(Velocity(0.6)), e);
    CHECK(interval(e) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(interval(boosted) == doctest::Approx(-1.0).epsilon(1e-14));

    rng::Engine eng(5);
    for (int i = 0; i < 1000; ++i) {
        const Event ev{rng::uniform(eng, -5, 5), rng::uniform(eng, -5, 5),
                       rng::uniform(eng, -5, 5), rng::uniform(eng, -5, 5),
                       "K"};
        const double l = rng::uniform(eng, 0.1, 10.0);
        const Boost b(Velocity(rng::uniform(eng, -0.99, 0.99)), l);
        const double scaled = interval(boost_apply(b, ev));
        const double expected = l * l * interval(ev);
        CHECK(std::abs(scaled - expected) <=
              1e-10 * std::max({1.0, std::abs(scaled), std::abs(expected)}));
    }
}
