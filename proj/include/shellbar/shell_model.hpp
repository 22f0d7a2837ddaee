#pragma once

#include <Eigen/Dense>
#include <vector>

#include "shellbar/control_net.hpp"
#include "shellbar/surface_basis.hpp"

namespace shellbar {

/// Isotropic linear elastic material.
struct Material {
  double E = 0.0;            // Young's modulus [Pa]
  double nu = 0.0;           // Poisson ratio
  double kappa = 5.0 / 6.0;  // transverse shear correction factor

  void validate() const;
  bool operator==(const Material&) const = default;
};

enum class ShellKind { plate, shell };

/// Mid-surface point and covariant tangent vectors.
struct SurfacePoint {
  Eigen::Vector3d x;
  Eigen::Vector3d x_xi;
  Eigen::Vector3d x_eta;
};

/// Single-patch degenerated Reissner-Mindlin shell: NURBS mid-surface,
/// constant thickness, one director per control point.
///
/// Directors are the unit surface normals at the control points' Greville
/// abscissae and are recomputed whenever a model is built, so refined models
/// always carry directors matching their own control layout. Plates pin every
/// director to +z.
class ShellModel {
 public:
  ShellModel(KnotVector xi, KnotVector eta, ControlNet net, double thickness, Material material,
             ShellKind kind);

  const SurfaceBasis& basis() const { return basis_; }
  const ControlNet& net() const { return net_; }
  double thickness() const { return thickness_; }
  const Material& material() const { return material_; }
  ShellKind kind() const { return kind_; }
  const std::vector<Eigen::Vector3d>& directors() const { return directors_; }
  int num_control_points() const { return net_.n * net_.m; }
  int degree_xi() const { return basis_.xi().degree(); }
  int degree_eta() const { return basis_.eta().degree(); }

  /// Same model on a new control layout (directors recomputed).
  ShellModel with_geometry(KnotVector xi, KnotVector eta, ControlNet net) const;
  ShellModel with_thickness(double thickness) const;

 private:
  SurfaceBasis basis_;
  ControlNet net_;
  double thickness_;
  Material material_;
  ShellKind kind_;
  std::vector<Eigen::Vector3d> directors_;
};

SurfacePoint surface_point(const ShellModel& model, double xi, double eta);
SurfacePoint surface_point(const ShellModel& model, const BasisSample& sample);

/// x_xi cross x_eta, normalized. Throws GeometryError at degenerate points.
Eigen::Vector3d unit_normal(const ShellModel& model, double xi, double eta);
Eigen::Vector3d unit_normal(const SurfacePoint& point);

std::vector<Eigen::Vector3d> compute_directors(const ShellModel& model);

/// Degenerated-shell map: sum_A R_A (x_A + zeta n_A), |zeta| <= h/2.
Eigen::Vector3d shell_point(const ShellModel& model, double xi, double eta, double zeta);

/// Interpolated director sum_A R_A n_A (not normalized).
Eigen::Vector3d interpolated_director(const ShellModel& model, const BasisSample& sample);

/// Uniform h-refinement to elements x elements from the current breakpoints.
ShellModel refine_uniform(const ShellModel& model, int elements_xi, int elements_eta);
/// Order elevation of both directions up to `degree` (no-op when already there).
ShellModel elevate_to(const ShellModel& model, int degree);

}  // namespace shellbar
