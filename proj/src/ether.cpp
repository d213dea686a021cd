#include "relkin/ether.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relkin/detail/formulas.hpp"

namespace relkin::ether {

Event light_intersect(const Event& emission, RayDirection dir,
                      const Station& target) {
    const double d = static_cast<double>(static_cast<int>(dir));
    const double t = detail::ray_station_time(
        emission.t, emission.x, d, target.x0, target.eps.value());
    if (!(t > emission.t)) {
        throw NoIntersection("light_intersect: ray never reaches station " +
                             target.label);
    }
    Event hit;
    hit.t = t;
    hit.x = target.position_at(t);
    hit.y = emission.y;
    hit.z = emission.z;
    hit.frame = emission.frame;
    return hit;
}

RodConfiguration RodConfiguration::make(double rest_length, Velocity eps) {
    if (!(rest_length > 0.0) || !std::isfinite(rest_length)) {
        throw std::domain_error("RodConfiguration: rest length must be > 0");
    }
    RodConfiguration rod;
    rod.rest_length = rest_length;
    rod.eps = eps;
    rod.contracted_length =
        detail::contracted_length(rest_length, eps.value());
    return rod;
}

ClosedForms round_trip_closed_form(double rest_length, Velocity eps) {
    const double e = eps.value();
    ClosedForms f;
    f.t2 = detail::closed_form_t2(rest_length, e);
    f.t3 = detail::closed_form_t3(rest_length, e);
    f.xB2 = detail::closed_form_xB2(rest_length, e);
    f.xA3 = detail::closed_form_xA3(rest_length, e);
    return f;
}

namespace {

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

RoundTripRecord round_trip_true(double rest_length, Velocity eps) {
    const RodConfiguration rod = RodConfiguration::make(rest_length, eps);

    const Station a{"A", 0.0, eps};
    const Station b{"B", rod.contracted_length, eps};

    const Event emission{0.0, a.position_at(0.0), 0.0, 0.0, "K"};
    const Event reflection = light_intersect(emission, RayDirection::Forward, b);
    const Event arrival = light_intersect(reflection, RayDirection::Backward, a);

    RoundTripRecord rec;
    rec.t1 = emission.t;
    rec.t2 = reflection.t;
    rec.t3 = arrival.t;
    rec.xA1 = emission.x;
    rec.xB2 = reflection.x;
    rec.xA3 = arrival.x;
    rec.forth_true = rec.t2 - rec.t1;
    rec.back_true = rec.t3 - rec.t2;

    // The geometric record must reproduce the closed forms; a mismatch here
    // is a transcription error in one of the two routes.
    const ClosedForms f = round_trip_closed_form(rest_length, eps);
    constexpr double tol = 1e-12;
    if (!close_rel(rec.t2, f.t2, tol) || !close_rel(rec.t3, f.t3, tol) ||
        !close_rel(rec.xB2, f.xB2, tol) || !close_rel(rec.xA3, f.xA3, tol)) {
        throw std::logic_error(
            "round_trip_true: geometric record disagrees with closed forms");
    }
    return rec;
}

}  // namespace relkin::ether
