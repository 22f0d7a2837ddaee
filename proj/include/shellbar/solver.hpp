#pragma once

#include <Eigen/Dense>

#include "shellbar/assembly.hpp"
#include "shellbar/shell_model.hpp"

namespace shellbar {

struct SolveOptions {
  /// Drilling stiffness kappa_d * max(diag K) * n n^T added to each control
  /// point's free rotation slots (shells only). Zero disables it.
  double drilling_penalty = 1e-8;
};

/// Factorizes K u = F with a sparse LDL^T. Throws NumericalError with an
/// estimate of the null-space dimension when the factorization breaks down.
Eigen::VectorXd solve_linear(const SparseMatrix& k, const Eigen::VectorXd& f);

/// Free-slot stiffness with the drilling regularization applied.
SparseMatrix regularized_stiffness(const GlobalSystem& system, const ShellModel& model, double drilling_penalty);

/// Displacements on every slot (prescribed values included).
Eigen::VectorXd solve(const GlobalSystem& system, const ShellModel& model, const SolveOptions& options = {});

/// Largest system the dense rank diagnostic accepts.
inline constexpr int kRankMaxSize = 5000;

/// Numerical rank by column-pivoted QR; pivots at or below N * eps * max|pivot|
/// count as zero. Throws ArgumentError above kRankMaxSize.
int stiffness_rank(const Eigen::MatrixXd& k);
/// Rank of the unregularized free-slot stiffness.
int stiffness_rank(const GlobalSystem& system);

}  // namespace shellbar
