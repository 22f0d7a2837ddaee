#pragma once

#include <array>

namespace shellbar {

/// Coefficients of a shear strain on the nodal unknowns (w1, w2, theta1, theta2).
using BeamShear = std::array<double, 4>;

/// Shear strain gamma = w' - theta of the two-node linear beam on [0, 1] at x.
BeamShear timoshenko_shear(double x);

/// L2 projection of the two-node beam's shear strain onto polynomials of
/// `order` (Bernstein basis), evaluated at x.
BeamShear timoshenko_projected_shear(double x, int order = 0);

/// Projected shear strain onto constants: (-1, 1, -1/2, -1/2).
inline BeamShear timoshenko_demo() { return timoshenko_projected_shear(0.0, 0); }

}  // namespace shellbar
