#pragma once

#include <Eigen/Dense>
#include <vector>

namespace shellbar {

/// Open (clamped) knot vector of a univariate B-spline space.
///
/// The constructor enforces: non-decreasing knots, first and last knot
/// repeated exactly degree+1 times, interior multiplicity at most degree,
/// and at least degree+1 basis functions.
class KnotVector {
 public:
  KnotVector(int degree, std::vector<double> knots);

  /// Open uniform knot vector with `elements` equal spans on [lo, hi].
  static KnotVector uniform(int degree, int elements, double lo = 0.0, double hi = 1.0);

  int degree() const { return degree_; }
  const std::vector<double>& knots() const { return knots_; }
  int num_basis() const { return static_cast<int>(knots_.size()) - degree_ - 1; }
  double front() const { return knots_.front(); }
  double back() const { return knots_.back(); }

  /// Distinct knot values, ascending (element boundaries).
  std::vector<double> unique_knots() const;
  int multiplicity(double u) const;
  int num_elements() const { return static_cast<int>(unique_knots().size()) - 1; }

  /// Span indices i with knots[i] < knots[i+1], ascending.
  std::vector<int> nonzero_spans() const;

  bool operator==(const KnotVector& other) const = default;

 private:
  int degree_;
  std::vector<double> knots_;
};

/// Index i with knots[i] <= u < knots[i+1]; u at the right end maps to the
/// last nonzero span. Throws DomainError outside [front, back].
int find_span(const KnotVector& kv, double u);

/// Values and derivatives of the degree+1 basis functions that are nonzero
/// on span `span`. Row k holds the k-th derivatives.
Eigen::MatrixXd basis_and_derivatives(const KnotVector& kv, int span, double u, int order);
Eigen::MatrixXd basis_and_derivatives(const KnotVector& kv, double u, int order);

/// One point per basis function: mean of the degree interior knots of its support.
std::vector<double> greville_abscissae(const KnotVector& kv);

/// Knot vector with every distinct knot's multiplicity raised by `times`.
KnotVector elevated_knot_vector(const KnotVector& kv, int times);

/// Degree-1-lower knot vector on the same breakpoints with no repeated interior
/// knots (C^{p-2} continuity), as used by the patch-wide B-bar projection.
KnotVector reduced_knot_vector(const KnotVector& kv);

}  // namespace shellbar
