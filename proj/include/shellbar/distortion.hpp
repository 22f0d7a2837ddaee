#pragma once

#include <array>
#include <optional>
#include <string>

#include "shellbar/control_net.hpp"
#include "shellbar/shell_model.hpp"

namespace shellbar {

enum class DistortionMode { expansion, rotation };

const char* to_string(DistortionMode mode);
std::optional<DistortionMode> distortion_mode_from_string(const std::string& s);

/// Moves the four central interior control points of a net with 4 x 4 points.
///
/// expansion: each point moves away from the centroid of the four along its
/// own diagonal by stage * max_shift_fraction * (distance to the nearest
/// boundary control point).
/// rotation: the four points turn about their centroid in the x-y plane by
/// stage * max_angle_deg.
struct DistortionSpec {
  DistortionMode mode = DistortionMode::expansion;
  double stage = 0.0;  // e or r; rotation also accepts negative stages to undo
  double max_shift_fraction = 0.5;
  double max_angle_deg = 30.0;
};

/// Indices of the moved points in a net with n = m = 4.
std::array<int, 4> distortion_points(const ControlNet& net);

/// Throws ArgumentError for a net that is not 4 x 4 or an out-of-range stage.
ControlNet distort_net(const ControlNet& net, const DistortionSpec& spec);

/// Smallest z-component of x_xi x x_eta over a sample grid of the surface,
/// relative to the tangent lengths; positive means a valid parametrization.
double min_jacobian(const ShellModel& model, int samples_per_element = 4);

/// Degree-2 plate split into 2 x 2 elements, distorted, then elevated and
/// uniformly refined to mesh x mesh (mesh must be even). Throws GeometryError
/// if the distortion folds the surface.
ShellModel distorted_plate_model(const ShellModel& coarse, const DistortionSpec& spec, int degree, int mesh);

}  // namespace shellbar
