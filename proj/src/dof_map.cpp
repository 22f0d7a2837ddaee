#include "shellbar/dof_map.hpp"

#include <algorithm>
#include <cmath>

#include "shellbar/error.hpp"
#include "shellbar/strain_operator.hpp"

namespace shellbar {

DofMap::DofMap(int num_points, int slots)
    : num_points_(num_points),
      slots_(slots),
      free_(static_cast<std::size_t>(num_points) * slots),
      value_(free_.size(), 0.0),
      fixed_(free_.size(), false) {
  if (num_points < 0 || slots < 1) throw ArgumentError("invalid DOF layout");
  renumber();
}

void DofMap::constrain(int point, int slot, double value) {
  if (point < 0 || point >= num_points_ || slot < 0 || slot >= slots_) {
    throw ConfigError("constraint refers to a nonexistent control point or slot");
  }
  if (!std::isfinite(value)) throw ConfigError("prescribed value must be finite");
  const int s = slot_index(point, slot);
  if (fixed_[s]) {
    if (value_[s] != value) throw ConfigError("conflicting prescribed values on one slot");
    return;
  }
  fixed_[s] = true;
  value_[s] = value;
  renumber();
}

void DofMap::renumber() {
  num_free_ = 0;
  for (std::size_t s = 0; s < free_.size(); ++s) free_[s] = fixed_[s] ? -1 : num_free_++;
}

Eigen::VectorXd DofMap::expand(const Eigen::VectorXd& free_values) const {
  if (free_values.size() != num_free_) throw ArgumentError("free vector has the wrong size");
  Eigen::VectorXd out(num_slots());
  for (int s = 0; s < num_slots(); ++s) out[s] = fixed_[s] ? value_[s] : free_values[free_[s]];
  return out;
}

Eigen::VectorXd DofMap::restrict(const Eigen::VectorXd& slot_values) const {
  if (slot_values.size() != num_slots()) throw ArgumentError("slot vector has the wrong size");
  Eigen::VectorXd out(num_free_);
  for (int s = 0; s < num_slots(); ++s) {
    if (!fixed_[s]) out[free_[s]] = slot_values[s];
  }
  return out;
}

std::vector<int> edge_points(const ControlNet& net, Edge edge) {
  std::vector<int> out;
  switch (edge) {
    case Edge::xi0:
    case Edge::xi1: {
      const int i = edge == Edge::xi0 ? 0 : net.n - 1;
      for (int j = 0; j < net.m; ++j) out.push_back(net.index(i, j));
      break;
    }
    case Edge::eta0:
    case Edge::eta1: {
      const int j = edge == Edge::eta0 ? 0 : net.m - 1;
      for (int i = 0; i < net.n; ++i) out.push_back(net.index(i, j));
      break;
    }
  }
  return out;
}

int corner_point(const ControlNet& net, std::array<int, 2> corner) {
  for (int c : corner) {
    if (c != 0 && c != 1) throw ConfigError("corner ends must be 0 or 1");
  }
  return net.index(corner[0] == 0 ? 0 : net.n - 1, corner[1] == 0 ? 0 : net.m - 1);
}

std::vector<int> constrained_slots(const ConstraintSpec& spec, ShellKind kind) {
  const int slots = slots_per_point(kind);
  std::vector<int> out;
  switch (spec.type) {
    case ConstraintType::clamp:
      for (int s = 0; s < slots; ++s) out.push_back(s);
      break;
    case ConstraintType::simple_support:
      out.push_back(static_cast<int>(Slot::w));
      break;
    case ConstraintType::symmetry: {
      if (spec.axes.size() != 1) throw ConfigError("symmetry needs exactly one normal axis");
      const int normal = spec.axes[0];
      out.push_back(normal);
      for (int a = 0; a < 3; ++a) {
        if (a != normal && 3 + a < slots) out.push_back(3 + a);
      }
      break;
    }
    case ConstraintType::rigid_diaphragm:
      if (spec.axes.size() != 2) throw ConfigError("rigid diaphragm needs a plane of two axes");
      out = spec.axes;
      break;
    case ConstraintType::fix:
      for (Slot s : spec.slots) {
        if (static_cast<int>(s) >= slots) throw ConfigError("slot not available for this model kind");
        out.push_back(static_cast<int>(s));
      }
      break;
  }
  for (int s : out) {
    if (s < 0 || s >= slots) throw ConfigError("constraint axis out of range");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DofMap build_dof_map(const ShellModel& model, const std::vector<ConstraintSpec>& constraints) {
  DofMap map(model.num_control_points(), slots_per_point(model.kind()));
  for (const ConstraintSpec& c : constraints) {
    std::vector<int> points;
    if (c.edge) {
      points = edge_points(model.net(), *c.edge);
    } else if (c.corner) {
      points.push_back(corner_point(model.net(), *c.corner));
    } else {
      throw ConfigError("constraint needs an edge or a corner");
    }
    const double value = c.type == ConstraintType::fix ? c.value : 0.0;
    for (int p : points) {
      for (int s : constrained_slots(c, model.kind())) map.constrain(p, s, value);
    }
  }
  return map;
}

}  // namespace shellbar
