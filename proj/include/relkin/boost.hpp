#pragma once

#include <cmath>
#include <stdexcept>

#include "relkin/detail/formulas.hpp"
#include "relkin/event.hpp"
#include "relkin/velocity.hpp"

namespace relkin {

/// A member of the two-parameter transformation family along x:
///
///     x' = kl (x - eps t),  y' = l y,  z' = l z,  t' = kl (t - eps x)
///
/// with k = gamma(eps). The physical subgroup fixes scale = 1; the general
/// scale parameter covers both the l of the ether formulation and the phi of
/// the identical-units formulation, which play the same role.
class Boost {
public:
    Boost() = default;  // identity

    explicit Boost(Velocity eps, double scale = 1.0)
        : eps_(eps), scale_(scale) {
        if (!std::isfinite(scale) || scale <= 0.0) {
            throw std::domain_error("Boost: scale must be positive and finite");
        }
    }

    Velocity velocity() const { return eps_; }
    double scale() const { return scale_; }
    double gamma() const { return relkin::gamma(eps_); }

private:
    Velocity eps_;
    double scale_ = 1.0;
};

/// Transform an event. The frame tag is advanced by appending a prime; with
/// eps = 0 and scale = 1 the coordinates come back unchanged.
inline Event boost_apply(const Boost& b, const Event& e) {
    const double eps = b.velocity().value();
    const double kl = b.scale() * b.gamma();
    Event out;
    out.t = detail::boost_time_row(kl, eps, e.t, e.x);
    out.x = detail::boost_space_row(kl, eps, e.t, e.x);
    out.y = b.scale() * e.y;
    out.z = b.scale() * e.z;
    out.frame = e.frame + "'";
    return out;
}

/// Composition in application order: applying the result equals applying
/// `first`, then `then`. Parameters compose as
/// eps'' = (eps + eps')/(1 + eps eps') and scale'' = l l'.
inline Boost boost_compose(const Boost& first, const Boost& then) {
    return Boost(compose_velocities(first.velocity(), then.velocity()),
                 first.scale() * then.scale());
}

/// Group inverse: (-eps, 1/l).
inline Boost boost_inverse(const Boost& b) {
    return Boost(-b.velocity(), 1.0 / b.scale());
}

}  // namespace relkin
