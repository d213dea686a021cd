#pragma once

#include <string>

#include "relkin/detail/formulas.hpp"

namespace relkin {

/// A spacetime point in natural units (c = 1), tagged with the name of the
/// coordinate frame the values refer to.
struct Event {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    std::string frame = "K";
};

/// t^2 - (x^2 + y^2 + z^2). Invariant under unit-scale boosts; scales by l^2
/// under a boost with scale l.
inline double interval(const Event& e) {
    return detail::interval_of(e.t, e.x, e.y, e.z);
}

}  // namespace relkin
