#pragma once

#include <Eigen/Dense>
#include <vector>

#include "shellbar/config.hpp"
#include "shellbar/shell_model.hpp"

namespace shellbar {

/// Control-point-major, slot-minor numbering of the unknowns. Constrained
/// slots carry a prescribed value instead of a free index.
class DofMap {
 public:
  DofMap(int num_points, int slots);

  int num_points() const { return num_points_; }
  int slots() const { return slots_; }
  int num_slots() const { return num_points_ * slots_; }
  int num_free() const { return num_free_; }

  int slot_index(int point, int slot) const { return point * slots_ + slot; }
  /// Free index of a slot, or -1 when constrained.
  int free_index(int slot_index) const { return free_[slot_index]; }
  bool is_free(int slot_index) const { return free_[slot_index] >= 0; }
  double prescribed(int slot_index) const { return value_[slot_index]; }

  /// Fixes a slot. Repeating a constraint with the same value is a no-op;
  /// a different value throws ConfigError. Invalidates previous free indices.
  void constrain(int point, int slot, double value);

  /// All-slot vector from free values plus prescribed values.
  Eigen::VectorXd expand(const Eigen::VectorXd& free_values) const;
  /// Free entries of an all-slot vector.
  Eigen::VectorXd restrict(const Eigen::VectorXd& slot_values) const;

 private:
  void renumber();

  int num_points_;
  int slots_;
  int num_free_ = 0;
  std::vector<int> free_;
  std::vector<double> value_;
  std::vector<bool> fixed_;
};

/// Control points on a patch edge, in increasing order of the running parameter.
std::vector<int> edge_points(const ControlNet& net, Edge edge);
/// Control point at a patch corner given (xi end, eta end) in {0, 1}.
int corner_point(const ControlNet& net, std::array<int, 2> corner);

/// Slots fixed by one constraint on a model of the given kind.
std::vector<int> constrained_slots(const ConstraintSpec& spec, ShellKind kind);

/// Throws ConfigError for constraints that name a missing edge/corner or an
/// unavailable slot.
DofMap build_dof_map(const ShellModel& model, const std::vector<ConstraintSpec>& constraints);

}  // namespace shellbar
