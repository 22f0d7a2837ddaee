#pragma once

#include <Eigen/Dense>
#include <vector>

#include "shellbar/quadrature.hpp"
#include "shellbar/shell_model.hpp"

namespace shellbar {

/// Patch-wide L2 projection onto the one-order-lower B-spline space (unit
/// weights, reduced knot vectors) sampled on a fixed in-plane rule.
class GlobalProjector {
 public:
  struct PointBasis {
    std::vector<int> index;  // lower-space functions nonzero at the point
    Eigen::VectorXd value;
    double measure = 0.0;    // quadrature weight times |x_xi x x_eta|
  };

  /// Throws ArgumentError for degree 1 (no lower spline space) and
  /// NumericalError if the global Gram matrix is singular.
  GlobalProjector(const ShellModel& model, const QuadratureRule& rule);

  int size() const { return static_cast<int>(gram_.rows()); }
  int num_elements() const { return static_cast<int>(points_.size()); }
  const Eigen::MatrixXd& gram() const { return gram_; }
  const std::vector<PointBasis>& element_points(int element) const { return points_[element]; }

  /// `samples[e][g]` holds a field value at point g of element e (any fixed
  /// shape). Returns the projected field at the same points.
  std::vector<std::vector<Eigen::MatrixXd>> project(
      const std::vector<std::vector<Eigen::MatrixXd>>& samples) const;

 private:
  std::vector<std::vector<PointBasis>> points_;
  Eigen::MatrixXd gram_;
  Eigen::LDLT<Eigen::MatrixXd> factor_;
};

/// Largest unconstrained system the dense classical B-bar stiffness accepts.
inline constexpr int kGlobalBbarMaxDofs = 6000;

/// Classical global B-bar stiffness over all control-point slots (dense,
/// control-point-major): sum_e K_e(without MID) + C^T H C with C = M^-1 G.
Eigen::MatrixXd global_bbar_stiffness(const ShellModel& model, const QuadratureRule& rule);

}  // namespace shellbar
