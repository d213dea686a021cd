#pragma once

// Per-element formulas shared by the scalar public API and the scalar batch
// lane. The AVX2 lane mirrors these expression trees operation for operation;
// together with -ffp-contract=off this keeps all lanes bit-identical.

#include <cmath>

namespace relkin::detail {

inline double gamma_of(double eps) {
    return 1.0 / std::sqrt(1.0 - eps * eps);
}

// Rows of x' = kl(x - eps t), t' = kl(t - eps x) with k = gamma(eps).
inline double boost_time_row(double kl, double eps, double t, double x) {
    return kl * (t - eps * x);
}

inline double boost_space_row(double kl, double eps, double t, double x) {
    return kl * (x - eps * t);
}

inline double interval_of(double t, double x, double y, double z) {
    return t * t - (x * x + y * y + z * z);
}

inline double compose_velocity(double a, double b) {
    return (a + b) / (1.0 + a * b);
}

// Intersection time of the ray x = x_e + dir (t - t_e) with the worldline
// x = x0 + eps t. dir is +1 or -1; |eps| < 1 keeps the denominator nonzero.
inline double ray_station_time(double t_e, double x_e, double dir,
                               double x0, double eps) {
    return (x0 - x_e + dir * t_e) / (dir - eps);
}

inline double contracted_length(double rest_length, double eps) {
    return rest_length * std::sqrt(1.0 - eps * eps);
}

// Closed forms for the forth/back light exchange between co-moving stations
// a rest length L apart, signal emitted at the origin event.
inline double closed_form_t2(double rest_length, double eps) {
    return rest_length * std::sqrt((1.0 + eps) / (1.0 - eps));
}

inline double closed_form_t3(double rest_length, double eps) {
    return (2.0 * rest_length) / std::sqrt(1.0 - eps * eps);
}

inline double closed_form_xB2(double rest_length, double eps) {
    return eps * closed_form_t2(rest_length, eps) +
           rest_length * std::sqrt(1.0 - eps * eps);
}

inline double closed_form_xA3(double rest_length, double eps) {
    return (2.0 * eps * rest_length) / std::sqrt(1.0 - eps * eps);
}

inline double kappa_true_of(double eps) {
    return (1.0 + eps) / 2.0;
}

}  // namespace relkin::detail
