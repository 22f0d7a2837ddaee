#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <optional>
#include <string>
#include <vector>

#include "shellbar/config.hpp"
#include "shellbar/dof_map.hpp"
#include "shellbar/projection.hpp"
#include "shellbar/quadrature.hpp"
#include "shellbar/shell_model.hpp"

namespace shellbar {

using SparseMatrix = Eigen::SparseMatrix<double>;

struct AssemblyOptions {
  Method method = Method::iga;
  int thickness_points = 2;
  int threads = 1;  // element loop workers; the reduction order is fixed
};

/// Stiffness and load over every control-point slot. Free-slot quantities are
/// derived through the DOF map, which keeps reactions available.
struct GlobalSystem {
  DofMap dofs;
  SparseMatrix k_all;
  Eigen::VectorXd f_all;
  std::optional<std::string> warning;  // e.g. GLB falling back to LB

  SparseMatrix free_stiffness() const;
  /// f_free - K_fc u_c for the prescribed values u_c.
  Eigen::VectorXd free_load() const;
};

/// Projection orders `method` uses on `model` (LB orders for iga/cbar too).
ProjectionAssignment projection_assignment(const ShellModel& model, Method method);

/// Element stiffness matrices scattered into an all-slot sparse matrix.
SparseMatrix assemble_stiffness(const ShellModel& model, const AssemblyOptions& options,
                                std::optional<std::string>* warning = nullptr);

GlobalSystem assemble(const ShellModel& model, const DofMap& dofs, const AssemblyOptions& options);

/// F_A += R_A(xi, eta) * magnitude * direction on the translation slots.
void apply_point_load(GlobalSystem& system, const ShellModel& model, std::array<double, 2> at,
                      const Eigen::Vector3d& direction, double magnitude);

/// F_A += integral of R_A p d over the mid-surface, d fixed or the unit normal.
void apply_pressure(GlobalSystem& system, const ShellModel& model, const std::optional<Eigen::Vector3d>& direction,
                    double magnitude);

void apply_loads(GlobalSystem& system, const ShellModel& model, const std::vector<LoadSpec>& loads);

/// K u - F on every slot; nonzero entries appear on constrained slots only.
Eigen::VectorXd reactions(const GlobalSystem& system, const Eigen::VectorXd& displacement);

}  // namespace shellbar
