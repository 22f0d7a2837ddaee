#pragma once

#include <Eigen/Dense>

#include "shellbar/shell_model.hpp"

namespace shellbar {

using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Vector6d = Eigen::Matrix<double, 6, 1>;

// Voigt strain order used throughout: (e11, e22, e33, g12, g13, g23) with
// engineering shear strains.

/// Plane-stress shell law in the lamina frame; row and column 2 (e33) are zero.
Matrix6d local_constitutive(const Material& material);

/// Orthonormal lamina triad and the matching Voigt strain rotation
/// (eps_local = T * eps_global).
struct LaminaFrame {
  Eigen::Matrix3d triad;  // rows e1, e2, e3
  Matrix6d T;
};

/// e1 along x_xi, e3 along x_xi cross x_eta, e2 = e3 cross e1.
LaminaFrame lamina_frame(const Eigen::Vector3d& x_xi, const Eigen::Vector3d& x_eta);

/// Voigt rotation for a triad whose rows are the new basis vectors.
Matrix6d strain_rotation(const Eigen::Matrix3d& triad);

/// T^T D_l T.
Matrix6d global_constitutive(const LaminaFrame& frame, const Matrix6d& d_local);

}  // namespace shellbar
