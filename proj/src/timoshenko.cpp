#include "shellbar/timoshenko.hpp"

#include <Eigen/Dense>

#include "shellbar/error.hpp"
#include "shellbar/quadrature.hpp"
#include "shellbar/surface_basis.hpp"

namespace shellbar {

BeamShear timoshenko_shear(double x) {
  // w = (1-x) w1 + x w2, theta = (1-x) theta1 + x theta2, w' = w2 - w1.
  return {-1.0, 1.0, x - 1.0, 0.0 - x};
}

BeamShear timoshenko_projected_shear(double x, int order) {
  if (order < 0 || order > 1) throw ArgumentError("beam shear projection order must be 0 or 1");
  const GaussRule rule = gauss_legendre(order + 2);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(order + 1, order + 1);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(order + 1, 4);
  for (std::size_t g = 0; g < rule.points.size(); ++g) {
    const double t = 0.5 * (rule.points[g] + 1.0);
    const double w = 0.5 * rule.weights[g];
    const Eigen::VectorXd n = bernstein(order, t);
    const BeamShear gamma = timoshenko_shear(t);
    gram += w * n * n.transpose();
    rhs += w * n * Eigen::Map<const Eigen::RowVector4d>(gamma.data());
  }
  const Eigen::RowVectorXd at = bernstein(order, x).transpose() * gram.ldlt().solve(rhs);
  return {at[0], at[1], at[2], at[3]};
}

}  // namespace shellbar
