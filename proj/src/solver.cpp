#include "shellbar/solver.hpp"

#include <Eigen/SparseCholesky>
#include <limits>

#include "shellbar/error.hpp"

namespace shellbar {

Eigen::VectorXd solve_linear(const SparseMatrix& k, const Eigen::VectorXd& f) {
  if (k.rows() != k.cols() || k.rows() != f.size()) throw ArgumentError("system size mismatch");
  if (k.rows() == 0) return Eigen::VectorXd();
  Eigen::SimplicialLDLT<SparseMatrix> ldlt(k);
  if (ldlt.info() != Eigen::Success) throw NumericalError("singular stiffness matrix; zero pivot in factorization");
  const Eigen::VectorXd d = ldlt.vectorD();
  const double largest = d.cwiseAbs().maxCoeff();
  const double tiny = 1e-15 * largest;
  int null_dim = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (!(std::abs(d[i]) > tiny)) ++null_dim;
  }
  if (null_dim > 0 || !(largest > 0.0)) {
    throw NumericalError("singular stiffness matrix; estimated null-space dimension " + std::to_string(null_dim));
  }
  Eigen::VectorXd u = ldlt.solve(f);
  // Thin shells are badly conditioned; two refinement sweeps recover the residual.
  for (int sweep = 0; sweep < 2; ++sweep) u += ldlt.solve(f - k * u);
  // Normwise backward error; thin-shell systems mix stiffness scales, so the
  // residual is measured against |K| |u| rather than |f| alone.
  double k_norm = 0.0;
  for (int c = 0; c < k.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(k, c); it; ++it) k_norm = std::max(k_norm, std::abs(it.value()));
  }
  const double residual = (k * u - f).norm();
  const double scale = k_norm * u.norm() * std::sqrt(static_cast<double>(k.rows())) + f.norm();
  if (!u.allFinite() || (scale > 0.0 && residual > 1e-10 * scale)) {
    throw NumericalError("stiffness solve lost accuracy; the system is close to singular");
  }
  return u;
}

SparseMatrix regularized_stiffness(const GlobalSystem& system, const ShellModel& model, double drilling_penalty) {
  SparseMatrix k = system.free_stiffness();
  if (model.kind() == ShellKind::plate || drilling_penalty == 0.0 || k.rows() == 0) return k;
  const double scale = drilling_penalty * k.diagonal().cwiseAbs().maxCoeff();
  std::vector<Eigen::Triplet<double>> t;
  for (int p = 0; p < model.num_control_points(); ++p) {
    const Eigen::Vector3d& n = model.directors()[p];
    for (int a = 0; a < 3; ++a) {
      const int ia = system.dofs.free_index(system.dofs.slot_index(p, 3 + a));
      if (ia < 0) continue;
      for (int b = 0; b < 3; ++b) {
        const int ib = system.dofs.free_index(system.dofs.slot_index(p, 3 + b));
        if (ib >= 0) t.emplace_back(ia, ib, scale * n[a] * n[b]);
      }
    }
  }
  SparseMatrix drill(k.rows(), k.cols());
  drill.setFromTriplets(t.begin(), t.end());
  return k + drill;
}

Eigen::VectorXd solve(const GlobalSystem& system, const ShellModel& model, const SolveOptions& options) {
  const SparseMatrix k = regularized_stiffness(system, model, options.drilling_penalty);
  return system.dofs.expand(solve_linear(k, system.free_load()));
}

int stiffness_rank(const Eigen::MatrixXd& k) {
  if (k.rows() > kRankMaxSize || k.cols() > kRankMaxSize) {
    throw ArgumentError("rank diagnostic is disabled for systems larger than " + std::to_string(kRankMaxSize));
  }
  if (k.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(k);
  qr.setThreshold(static_cast<double>(std::max(k.rows(), k.cols())) * std::numeric_limits<double>::epsilon());
  return static_cast<int>(qr.rank());
}

int stiffness_rank(const GlobalSystem& system) {
  if (system.dofs.num_free() > kRankMaxSize) {
    throw ArgumentError("rank diagnostic is disabled for systems larger than " + std::to_string(kRankMaxSize));
  }
  return stiffness_rank(Eigen::MatrixXd(system.free_stiffness()));
}

}  // namespace shellbar
