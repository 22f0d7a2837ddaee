#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "shellbar/quadrature.hpp"
#include "shellbar/shell_model.hpp"
#include "shellbar/strain_operator.hpp"

namespace shellbar {

/// Orders (p_bar, q_bar) of an element's projection space Q_{p_bar, q_bar}.
struct ProjectionOrders {
  int p_bar = 0;
  int q_bar = 0;
  bool operator==(const ProjectionOrders&) const = default;
};

enum class ProjectionStrategy { lb, glb };

/// Projection orders per element, eta-major like SurfaceBasis::elements().
struct ProjectionAssignment {
  int elements_xi = 0;
  int elements_eta = 0;
  std::vector<ProjectionOrders> orders;
  std::optional<std::string> warning;

  const ProjectionOrders& at(int i, int j) const { return orders[j * elements_xi + i]; }
};

/// LB: every element gets (p-1, q-1).
/// GLB (p = q = 2 only): corners (1,1); elements on an eta = const boundary (0,1);
/// on a xi = const boundary (1,0); interior (0,0). A mesh one element wide is
/// all corners. Other degrees fall back to LB and set `warning`.
ProjectionAssignment assign_projection_spaces(int elements_xi, int elements_eta, ProjectionStrategy strategy,
                                              int p, int q);

/// Projection-space data of one element on a given in-plane rule.
struct ElementProjection {
  ProjectionOrders orders;
  Eigen::MatrixXd basis;    // (quadrature points) x (projection functions)
  Eigen::VectorXd measure;  // quadrature weight times |x_xi x x_eta|
  Eigen::MatrixXd gram;     // basis^T diag(measure) basis
};

/// Throws GeometryError when a surface measure is non-positive or the Gram
/// matrix is not positive definite.
ElementProjection element_projection(const ShellModel& model, const ElementSpan& element, ProjectionOrders orders,
                                     const QuadratureRule& rule);
ElementProjection element_projection(const ElementSpan& element, ProjectionOrders orders,
                                     const std::vector<QuadraturePoint>& points, const Eigen::VectorXd& area_measure);

inline Eigen::MatrixXd element_gram(const ShellModel& model, const ElementSpan& element, ProjectionOrders orders,
                                    const QuadratureRule& rule) {
  return element_projection(model, element, orders, rule).gram;
}

/// Operator mapping samples at the quadrature points to their least-squares
/// projection evaluated at the same points: N M^-1 N^T W.
Eigen::MatrixXd projection_operator(const ElementProjection& projection);

/// L2 projection of sampled MID operators onto the element's space, evaluated
/// back at each quadrature point.
std::vector<StrainMatrix> project_mid_strain(const ElementProjection& projection,
                                             const std::vector<StrainMatrix>& mid_samples);

}  // namespace shellbar
