#pragma once

#include <Eigen/Dense>
#include <vector>

#include "shellbar/projection.hpp"
#include "shellbar/quadrature.hpp"
#include "shellbar/shell_model.hpp"
#include "shellbar/strain_operator.hpp"

namespace shellbar {

/// Dense element matrix over the element's control points (BasisSample order),
/// slots_per_point(kind) unknowns per point.
struct ElementStiffness {
  std::vector<int> cp;
  Eigen::MatrixXd k;
};

/// Samples of one element on an in-plane rule, with the thickness rule applied.
std::vector<SectionSample> element_sections(const ShellModel& model, const ElementSpan& element,
                                            const QuadratureRule& rule);

/// sum_g w_g sum_z w_z det J B^T D B.
ElementStiffness element_stiffness_iga(const ShellModel& model, const ElementSpan& element,
                                       const QuadratureRule& rule);

/// The same integral with the through-thickness average removed:
/// sum_g w_g [sum_z w_z det J B^T D B - V_g MID^T D MID], V_g = sum_z w_z det J.
ElementStiffness element_stiffness_without_mid(const ShellModel& model, const ElementSpan& element,
                                               const QuadratureRule& rule);

/// Local B-bar stiffness with the element's projection space:
/// K_e = sum_g w_g [sum_z w_z det J B^T D B + V_g (Bbar^T D Bbar - MID^T D MID)].
ElementStiffness element_stiffness_bbar(const ShellModel& model, const ElementSpan& element,
                                        ProjectionOrders orders, const QuadratureRule& rule);

}  // namespace shellbar
