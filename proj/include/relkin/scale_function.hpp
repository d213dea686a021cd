#pragma once

#include <span>

#include "relkin/velocity.hpp"

namespace relkin {

/// Outcome of forcing the scale parameter of the two-parameter family to be a
/// function l(eps) such that the one-parameter subfamily is itself a group.
struct ScaleVerdict {
    /// max over samples of |l(eps) - 1| for the solved scale function.
    double max_deviation = 0.0;
    /// max residual of the group constraints evaluated with the solution
    /// (inverse-pair velocity, scale reciprocity, closure over sample pairs).
    double max_constraint_residual = 0.0;
    /// false would mean the constraint system admitted no solution.
    bool consistent = true;
};

/// Solve for l(eps) at every sample under the subgroup constraints:
/// composing (eps, l(eps)) with (-eps, l(-eps)) must give the identity
/// (so l(eps) l(-eps) = 1), isotropy gives l(eps) = l(-eps), and closure
/// gives l(eps'') = l(eps) l(eps'). The unique positive solution is l = 1;
/// the verdict records how far the numerically solved values deviate from it.
///
/// Throws std::invalid_argument on an empty sample list.
ScaleVerdict solve_scale_function(std::span<const Velocity> samples);

}  // namespace relkin
