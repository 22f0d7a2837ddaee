#include "shellbar/constitutive.hpp"

#include "shellbar/error.hpp"

namespace shellbar {
namespace {

// Voigt index -> tensor index pair.
constexpr int kPair[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};

}  // namespace

Matrix6d local_constitutive(const Material& material) {
  const double c = material.E / (1.0 - material.nu * material.nu);
  const double g = c * (1.0 - material.nu) / 2.0;
  Matrix6d d = Matrix6d::Zero();
  d(0, 0) = c;
  d(1, 1) = c;
  d(0, 1) = c * material.nu;
  d(1, 0) = c * material.nu;
  d(3, 3) = g;
  d(4, 4) = material.kappa * g;
  d(5, 5) = material.kappa * g;
  return d;
}

Matrix6d strain_rotation(const Eigen::Matrix3d& r) {
  Matrix6d t;
  for (int a = 0; a < 6; ++a) {
    const int i = kPair[a][0];
    const int j = kPair[a][1];
    const double scale = i == j ? 0.5 : 1.0;
    for (int b = 0; b < 6; ++b) {
      const int k = kPair[b][0];
      const int l = kPair[b][1];
      t(a, b) = scale * (r(i, k) * r(j, l) + r(i, l) * r(j, k));
    }
  }
  return t;
}

LaminaFrame lamina_frame(const Eigen::Vector3d& x_xi, const Eigen::Vector3d& x_eta) {
  const Eigen::Vector3d c = x_xi.cross(x_eta);
  if (!(x_xi.norm() > 0.0) || c.norm() <= 1e-14 * x_xi.norm() * x_eta.norm()) {
    throw GeometryError("degenerate tangents: cannot build lamina frame");
  }
  LaminaFrame f;
  const Eigen::Vector3d e1 = x_xi.normalized();
  const Eigen::Vector3d e3 = c.normalized();
  const Eigen::Vector3d e2 = e3.cross(e1);
  f.triad.row(0) = e1.transpose();
  f.triad.row(1) = e2.transpose();
  f.triad.row(2) = e3.transpose();
  f.T = strain_rotation(f.triad);
  return f;
}

Matrix6d global_constitutive(const LaminaFrame& frame, const Matrix6d& d_local) {
  return frame.T.transpose() * d_local * frame.T;
}

}  // namespace shellbar
