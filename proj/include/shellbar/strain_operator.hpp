#pragma once

#include <Eigen/Dense>
#include <vector>

#include "shellbar/constitutive.hpp"
#include "shellbar/quadrature.hpp"
#include "shellbar/shell_model.hpp"

namespace shellbar {

using StrainMatrix = Eigen::Matrix<double, 6, Eigen::Dynamic>;

/// Unknowns per control point: 6 for shells, 5 for plates (no drilling slot).
inline int slots_per_point(ShellKind kind) { return kind == ShellKind::plate ? 5 : 6; }

/// Global Cartesian Voigt strains of the degenerated shell at one material point.
///
/// Columns follow the element's local control points (BasisSample order) and,
/// within a point, the slots u, v, w, rx, ry[, rz].
struct StrainOperator {
  StrainMatrix b;
  double det_j = 0.0;  // det d(x,y,z)/d(xi,eta,zeta)
};

StrainOperator strain_operator(const ShellModel& model, const BasisSample& sample, double zeta);
StrainOperator strain_operator(const ShellModel& model, const ElementSpan& element, double xi, double eta,
                               double zeta);

/// Through-thickness average (1/h) * integral of B over [-h/2, h/2].
StrainMatrix mid_operator(const ShellModel& model, const ElementSpan& element, double xi, double eta,
                          int thickness_points = 2);

/// Everything the stiffness integrators need at one in-plane point.
struct SectionSample {
  BasisSample basis;
  SurfacePoint surface;
  Matrix6d d_global;
  double area_measure = 0.0;          // |x_xi x x_eta|
  std::vector<StrainOperator> layers;  // one per thickness point
  std::vector<double> layer_weights;   // thickness weights, sum to h
  StrainMatrix mid;
  double volume_measure = 0.0;         // sum_k w_k det J_k
};

SectionSample section_sample(const ShellModel& model, const ElementSpan& element, double xi, double eta,
                             const GaussRule& thickness_rule, const Matrix6d& d_local);

}  // namespace shellbar
