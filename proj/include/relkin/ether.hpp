#pragma once

#include <stdexcept>
#include <string>

#include "relkin/event.hpp"
#include "relkin/velocity.hpp"

namespace relkin::ether {

/// A station co-moving with frame K' at velocity eps relative to the ether
/// frame K, passing through x0 at t = 0.
struct Station {
    std::string label;
    double x0 = 0.0;
    Velocity eps;

    double position_at(double t) const { return x0 + eps.value() * t; }
};

enum class RayDirection : int { Forward = +1, Backward = -1 };

struct NoIntersection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Where the light ray x = x_emit + dir (t - t_emit) meets the station
/// worldline, strictly after emission. Throws NoIntersection if the ray
/// moves away from the station forever (a mis-specified scenario).
Event light_intersect(const Event& emission, RayDirection dir,
                      const Station& target);

/// A rod at rest in K' with rest length L carries the really contracted
/// ether-frame length L sqrt(1 - eps^2).
struct RodConfiguration {
    double rest_length = 1.0;
    Velocity eps;
    double contracted_length = 1.0;

    static RodConfiguration make(double rest_length, Velocity eps);
};

/// Bookkeeping for the forth/back light exchange in the ether frame:
/// emission at A, reflection at B, return at A, all in true time.
struct RoundTripRecord {
    double t1 = 0.0, t2 = 0.0, t3 = 0.0;
    double xA1 = 0.0, xB2 = 0.0, xA3 = 0.0;
    double forth_true = 0.0;  // t2 - t1
    double back_true = 0.0;   // t3 - t2
};

/// Closed-form values for the same exchange; used as the assertion target
/// for the geometric record and as the formula column in sweeps.
struct ClosedForms {
    double t2 = 0.0, t3 = 0.0, xB2 = 0.0, xA3 = 0.0;
};

ClosedForms round_trip_closed_form(double rest_length, Velocity eps);

/// The full record, computed geometrically via light_intersect with A at the
/// origin at t = 0 and B ahead at the contracted distance. The result is
/// cross-checked against the closed forms; a mismatch throws std::logic_error.
RoundTripRecord round_trip_true(double rest_length, Velocity eps);

}  // namespace relkin::ether
