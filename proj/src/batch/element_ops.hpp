#pragma once

// Per-element composites used by the scalar lane and by the tail loops of
// the SIMD lanes. Everything routes through detail/formulas.hpp so the
// batch lanes and the scalar module code share one expression tree.

#include "relkin/detail/formulas.hpp"

namespace relkin::batch::detail {

namespace f = relkin::detail;

struct RoundTripElement {
    double t2, t3, xB2, xA3, forth_local, back_local;
};

inline RoundTripElement round_trip_element(double rest_length, double eps) {
    const double xB0 = f::contracted_length(rest_length, eps);
    const double t2 = f::ray_station_time(0.0, 0.0, 1.0, xB0, eps);
    const double xB2 = xB0 + eps * t2;
    const double t3 = f::ray_station_time(t2, xB2, -1.0, 0.0, eps);
    const double xA3 = 0.0 + eps * t3;

    const double g = f::gamma_of(eps);
    const double l1 = f::boost_time_row(g, eps, 0.0, 0.0);
    const double l2 = f::boost_time_row(g, eps, t2, xB2);
    const double l3 = f::boost_time_row(g, eps, t3, xA3);

    return RoundTripElement{t2, t3, xB2, xA3, l2 - l1, l3 - l2};
}

struct ClosedFormElement {
    double t2, t3, xB2, xA3;
};

inline ClosedFormElement closed_form_element(double rest_length, double eps) {
    return ClosedFormElement{
        f::closed_form_t2(rest_length, eps), f::closed_form_t3(rest_length, eps),
        f::closed_form_xB2(rest_length, eps),
        f::closed_form_xA3(rest_length, eps)};
}

}  // namespace relkin::batch::detail
