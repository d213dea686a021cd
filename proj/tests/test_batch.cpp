#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "relkin/batch.hpp"
#include "relkin/boost.hpp"
#include "relkin/ether.hpp"
#include "relkin/rng.hpp"
#include "relkin/sync.hpp"
#include "relkin/velocity.hpp"

using namespace relkin;
namespace batch = relkin::batch;

namespace {

// Odd length on purpose: exercises the SIMD tail loop.
constexpr std::size_t kN = 1031;

struct Inputs {
    std::vector<double> eps, scale, t, x, y, z, L;
};

Inputs draw_inputs(std::uint64_t seed) {
    Inputs in;
    rng::Engine eng(seed);
    for (std::size_t i = 0; i < kN; ++i) {
        in.eps.push_back(rng::uniform(eng, -0.99, 0.99));
        in.scale.push_back(rng::uniform(eng, 0.1, 10.0));
        in.t.push_back(rng::uniform(eng, -5.0, 5.0));
        in.x.push_back(rng::uniform(eng, -5.0, 5.0));
        in.y.push_back(rng::uniform(eng, -5.0, 5.0));
        in.z.push_back(rng::uniform(eng, -5.0, 5.0));
        in.L.push_back(rng::uniform(eng, 0.1, 10.0));
    }
    return in;
}

}  // namespace

TEST_CASE("batch kernels agree with the scalar API exactly") {
    batch::set_backend(batch::Backend::Scalar);
    const Inputs in = draw_inputs(101);

    SUBCASE("gamma") {
        std::vector<double> out(kN);
        batch::gamma_batch(in.eps, out);
        for (std::size_t i = 0; i < kN; ++i) {
            CHECK(out[i] == gamma(Velocity(in.eps[i])));
        }
    }
    SUBCASE("compose velocities") {
        std::vector<double> b(kN), out(kN);
        for (std::size_t i = 0; i < kN; ++i) b[i] = -in.eps[kN - 1 - i];
        batch::compose_velocities_batch(in.eps, b, out);
        for (std::size_t i = 0; i < kN; ++i) {
            CHECK(out[i] == compose_velocities(Velocity(in.eps[i]),
                                               Velocity(b[i]))
                                .value());
        }
    }
    SUBCASE("boost apply") {
        std::vector<double> t(kN), x(kN), y(kN), z(kN);
        batch::boost_apply_batch(in.eps, in.scale, in.t, in.x, in.y, in.z, t,
                                 x, y, z);
        for (std::size_t i = 0; i < kN; ++i) {
            const Event ev = boost_apply(
                Boost(Velocity(in.eps[i]), in.scale[i]),
                Event{in.t[i], in.x[i], in.y[i], in.z[i], "K"});
            CHECK(t[i] == ev.t);
            CHECK(x[i] == ev.x);
            CHECK(y[i] == ev.y);
            CHECK(z[i] == ev.z);
        }
    }
    SUBCASE("interval") {
        std::vector<double> out(kN);
        batch::interval_batch(in.t, in.x, in.y, in.z, out);
        for (std::size_t i = 0; i < kN; ++i) {
            CHECK(out[i] ==
                  interval(Event{in.t[i], in.x[i], in.y[i], in.z[i], "K"}));
        }
    }
    SUBCASE("local time") {
        std::vector<double> out(kN);
        batch::local_time_batch(in.eps, in.t, in.x, out);
        for (std::size_t i = 0; i < kN; ++i) {
            CHECK(out[i] == sync::local_time(
                                Event{in.t[i], in.x[i], 0, 0, "K"},
                                Velocity(in.eps[i])));
        }
    }
    SUBCASE("round trip matches the event-level simulation bit for bit") {
        std::vector<double> t2(kN), t3(kN), xB2(kN), xA3(kN), fl(kN), bl(kN);
        batch::round_trip_batch(in.L, in.eps,
                                batch::RoundTripArrays{t2, t3, xB2, xA3, fl,
                                                       bl});
        for (std::size_t i = 0; i < kN; ++i) {
            const Velocity eps(in.eps[i]);
            const auto rec = ether::round_trip_true(in.L[i], eps);
            CHECK(t2[i] == rec.t2);
            CHECK(t3[i] == rec.t3);
            CHECK(xB2[i] == rec.xB2);
            CHECK(xA3[i] == rec.xA3);
            const auto rep = sync::round_trip_report(
                in.L[i], eps, sync::TimeBasis::LocalTime);
            CHECK(fl[i] == rep.forth);
            CHECK(bl[i] == rep.back);
        }
    }
    SUBCASE("closed forms") {
        std::vector<double> t2(kN), t3(kN), xB2(kN), xA3(kN);
        batch::closed_form_batch(in.L, in.eps, t2, t3, xB2, xA3);
        for (std::size_t i = 0; i < kN; ++i) {
            const auto f =
                ether::round_trip_closed_form(in.L[i], Velocity(in.eps[i]));
            CHECK(t2[i] == f.t2);
            CHECK(t3[i] == f.t3);
            CHECK(xB2[i] == f.xB2);
            CHECK(xA3[i] == f.xA3);
        }
    }
    SUBCASE("kappa closed form") {
        std::vector<double> out(kN);
        batch::kappa_true_batch(in.eps, out);
        for (std::size_t i = 0; i < kN; ++i) {
            CHECK(out[i] == sync::kappa_true(Velocity(in.eps[i])));
        }
    }

    batch::set_backend(batch::Backend::Auto);
}

TEST_CASE("avx2 lane is bit-identical to the scalar lane") {
    if (!batch::avx2_available()) {
        MESSAGE("AVX2 not available; lane equivalence not exercised");
        return;
    }
    const Inputs in = draw_inputs(202);

    std::vector<double> b(kN);
    for (std::size_t i = 0; i < kN; ++i) b[i] = in.eps[kN - 1 - i];

    const auto run = [&](batch::Backend backend) {
        batch::set_backend(backend);
        std::vector<std::vector<double>> outs;
        std::vector<double> o1(kN);
        batch::gamma_batch(in.eps, o1);
        outs.push_back(o1);
        std::vector<double> o2(kN);
        batch::compose_velocities_batch(in.eps, b, o2);
        outs.push_back(o2);
        std::vector<double> t(kN), x(kN), y(kN), z(kN);
        batch::boost_apply_batch(in.eps, in.scale, in.t, in.x, in.y, in.z, t,
                                 x, y, z);
        outs.push_back(t);
        outs.push_back(x);
        outs.push_back(y);
        outs.push_back(z);
        std::vector<double> o3(kN);
        batch::interval_batch(in.t, in.x, in.y, in.z, o3);
        outs.push_back(o3);
        std::vector<double> o4(kN);
        batch::local_time_batch(in.eps, in.t, in.x, o4);
        outs.push_back(o4);
        std::vector<double> t2(kN), t3(kN), xB2(kN), xA3(kN), fl(kN), bl(kN);
        batch::round_trip_batch(in.L, in.eps,
                                batch::RoundTripArrays{t2, t3, xB2, xA3, fl,
                                                       bl});
        outs.insert(outs.end(), {t2, t3, xB2, xA3, fl, bl});
        std::vector<double> c2(kN), c3(kN), cB(kN), cA(kN);
        batch::closed_form_batch(in.L, in.eps, c2, c3, cB, cA);
        outs.insert(outs.end(), {c2, c3, cB, cA});
        std::vector<double> o5(kN);
        batch::kappa_true_batch(in.eps, o5);
        outs.push_back(o5);
        return outs;
    };

    const auto scalar = run(batch::Backend::Scalar);
    const auto avx2 = run(batch::Backend::Avx2);
    batch::set_backend(batch::Backend::Auto);

    REQUIRE(scalar.size() == avx2.size());
    for (std::size_t k = 0; k < scalar.size(); ++k) {
        for (std::size_t i = 0; i < kN; ++i) {
            CHECK(scalar[k][i] == avx2[k][i]);
        }
    }
}

TEST_CASE("backend selection and size checking") {
    CHECK(batch::active_backend() != batch::Backend::Auto);
    CHECK((batch::backend_name() == "scalar" ||
           batch::backend_name() == "avx2"));

    std::vector<double> small(3), big(4);
    CHECK_THROWS_AS(batch::gamma_batch(small, big), std::invalid_argument);

    batch::set_backend(batch::Backend::Scalar);
    CHECK(batch::backend_name() == "scalar");
    batch::set_backend(batch::Backend::Auto);
    if (batch::avx2_available()) {
        CHECK(batch::backend_name() == "avx2");
    }
}
