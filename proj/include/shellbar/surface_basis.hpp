#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "shellbar/knot_vector.hpp"

namespace shellbar {

/// One knot-span rectangle of the parametric domain.
struct ElementSpan {
  int i = 0;  // knot span index in xi
  int j = 0;  // knot span index in eta
  int ex = 0;  // element position along xi, 0-based
  int ey = 0;  // element position along eta
  std::pair<double, double> xi_range;
  std::pair<double, double> eta_range;

  double xi_length() const { return xi_range.second - xi_range.first; }
  double eta_length() const { return eta_range.second - eta_range.first; }
  double area() const { return xi_length() * eta_length(); }
};

/// Nonzero rational basis functions at one parametric point.
///
/// Local function a = b*(p+1) + a_xi couples xi-function a_xi and eta-function b;
/// `cp` holds the matching global control-point indices (xi fastest).
struct BasisSample {
  Eigen::VectorXd r;
  Eigen::VectorXd dr_dxi;
  Eigen::VectorXd dr_deta;
  std::vector<int> cp;
};

/// Tensor-product NURBS basis on an open knot-vector pair with positive weights.
class SurfaceBasis {
 public:
  /// `weights` is laid out xi-fastest: weights[j * n + i].
  SurfaceBasis(KnotVector xi, KnotVector eta, std::vector<double> weights);

  const KnotVector& xi() const { return xi_; }
  const KnotVector& eta() const { return eta_; }
  const std::vector<double>& weights() const { return weights_; }
  int n() const { return xi_.num_basis(); }
  int m() const { return eta_.num_basis(); }
  int num_functions() const { return n() * m(); }
  int functions_per_element() const { return (xi_.degree() + 1) * (eta_.degree() + 1); }

  /// Elements ordered eta-major, xi-minor.
  std::vector<ElementSpan> elements() const;
  int elements_xi() const { return static_cast<int>(xi_.nonzero_spans().size()); }
  int elements_eta() const { return static_cast<int>(eta_.nonzero_spans().size()); }

  BasisSample evaluate(double xi, double eta) const;
  /// Evaluates with the spans of `element`; (xi, eta) should lie in its closure.
  BasisSample evaluate(const ElementSpan& element, double xi, double eta) const;

 private:
  BasisSample evaluate_spans(int span_i, int span_j, double xi, double eta) const;

  KnotVector xi_;
  KnotVector eta_;
  std::vector<double> weights_;
};

/// Tensor-product Bernstein basis of orders (p_bar, q_bar) on an element's
/// parametric rectangle, used as the local B-bar projection space.
class ProjectionBasis {
 public:
  ProjectionBasis(const ElementSpan& element, int p_bar, int q_bar);

  int size() const { return (p_bar_ + 1) * (q_bar_ + 1); }
  int p_bar() const { return p_bar_; }
  int q_bar() const { return q_bar_; }
  /// Values ordered b*(p_bar+1) + a.
  Eigen::VectorXd evaluate(double xi, double eta) const;

 private:
  ElementSpan element_;
  int p_bar_;
  int q_bar_;
};

inline BasisSample rational_surface_basis(const SurfaceBasis& basis, double xi, double eta) {
  return basis.evaluate(xi, eta);
}

inline ProjectionBasis projection_basis(const ElementSpan& element, int p_bar, int q_bar) {
  return ProjectionBasis(element, p_bar, q_bar);
}

/// Bernstein polynomials of degree `degree` at t in [0, 1].
Eigen::VectorXd bernstein(int degree, double t);

}  // namespace shellbar
