#include "shellbar/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "shellbar/error.hpp"

namespace shellbar {

const char* to_string(DistortionMode mode) {
  return mode == DistortionMode::expansion ? "expansion" : "rotation";
}

std::optional<DistortionMode> distortion_mode_from_string(const std::string& s) {
  if (s == "expansion") return DistortionMode::expansion;
  if (s == "rotation") return DistortionMode::rotation;
  return std::nullopt;
}

std::array<int, 4> distortion_points(const ControlNet& net) {
  if (net.n != 4 || net.m != 4) throw ArgumentError("distortion needs a net with 4 x 4 control points");
  return {net.index(1, 1), net.index(2, 1), net.index(1, 2), net.index(2, 2)};
}

ControlNet distort_net(const ControlNet& net, const DistortionSpec& spec) {
  const auto moved = distortion_points(net);
  if (!std::isfinite(spec.stage) || spec.stage > 1.0 ||
      spec.stage < (spec.mode == DistortionMode::rotation ? -1.0 : 0.0)) {
    throw ArgumentError("distortion stage out of range");
  }
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  for (int p : moved) center += net.points[p] / 4.0;
  ControlNet out = net;
  if (spec.mode == DistortionMode::expansion) {
    for (int p : moved) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int j = 0; j < net.m; ++j) {
        for (int i = 0; i < net.n; ++i) {
          if (i == 0 || j == 0 || i == net.n - 1 || j == net.m - 1) {
            nearest = std::min(nearest, (net.point(i, j) - net.points[p]).norm());
          }
        }
      }
      const Eigen::Vector3d dir = (net.points[p] - center).normalized();
      out.points[p] += spec.stage * spec.max_shift_fraction * nearest * dir;
    }
  } else {
    const double a = spec.stage * spec.max_angle_deg * std::numbers::pi / 180.0;
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(a, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    for (int p : moved) out.points[p] = center + rot * (net.points[p] - center);
  }
  return out;
}

double min_jacobian(const ShellModel& model, int samples_per_element) {
  double worst = std::numeric_limits<double>::infinity();
  for (const ElementSpan& el : model.basis().elements()) {
    for (int b = 0; b <= samples_per_element; ++b) {
      for (int a = 0; a <= samples_per_element; ++a) {
        const double xi = el.xi_range.first + el.xi_length() * a / samples_per_element;
        const double eta = el.eta_range.first + el.eta_length() * b / samples_per_element;
        const SurfacePoint sp = surface_point(model, model.basis().evaluate(el, xi, eta));
        worst = std::min(worst, sp.x_xi.cross(sp.x_eta).z() / (sp.x_xi.norm() * sp.x_eta.norm()));
      }
    }
  }
  return worst;
}

ShellModel distorted_plate_model(const ShellModel& coarse, const DistortionSpec& spec, int degree, int mesh) {
  if (mesh < 2 || mesh % 2 != 0) throw ConfigError("distorted meshes must have an even element count");
  if (degree < 2) throw ConfigError("distortion needs degree >= 2");
  const ShellModel split = refine_uniform(elevate_to(coarse, 2), 2, 2);
  const ShellModel moved = split.with_geometry(split.basis().xi(), split.basis().eta(),
                                               distort_net(split.net(), spec));
  if (!(min_jacobian(moved) > 0.0)) throw GeometryError("distortion folds the surface (non-positive Jacobian)");
  return refine_uniform(elevate_to(moved, degree), mesh, mesh);
}

}  // namespace shellbar
