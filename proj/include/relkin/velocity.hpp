#pragma once

#include <cmath>
#include <stdexcept>

#include "relkin/detail/formulas.hpp"

namespace relkin {

/// A velocity as the dimensionless ratio v/c, constrained to |value| < 1.
class Velocity {
public:
    Velocity() = default;

    explicit Velocity(double ratio) : ratio_(ratio) {
        if (!std::isfinite(ratio) || std::abs(ratio) >= 1.0) {
            throw std::domain_error(
                "Velocity: |v/c| must be strictly less than 1");
        }
    }

    double value() const { return ratio_; }

    Velocity operator-() const { return Velocity(-ratio_); }

    friend bool operator==(Velocity a, Velocity b) {
        return a.ratio_ == b.ratio_;
    }

private:
    double ratio_ = 0.0;
};

/// Lorentz factor 1/sqrt(1 - eps^2). Always finite and >= 1 for a valid
/// Velocity, with equality exactly at rest.
inline double gamma(Velocity eps) { return detail::gamma_of(eps.value()); }

/// Relativistic velocity composition (a + b)/(1 + ab). Closed on (-1, 1).
inline Velocity compose_velocities(Velocity a, Velocity b) {
    return Velocity(detail::compose_velocity(a.value(), b.value()));
}

}  // namespace relkin
