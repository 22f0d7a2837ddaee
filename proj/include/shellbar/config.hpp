#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "shellbar/shell_model.hpp"

namespace shellbar {

/// Patch boundary, named by the constant parameter value along it.
enum class Edge { xi0, xi1, eta0, eta1 };

/// Per-control-point unknowns: three translations, three rotations.
enum class Slot { u = 0, v = 1, w = 2, rx = 3, ry = 4, rz = 5 };

enum class ConstraintType { clamp, simple_support, symmetry, rigid_diaphragm, fix };

/// Boundary condition on an edge or on the control point at a patch corner.
///
/// - clamp: every slot fixed.
/// - simple_support: w fixed.
/// - symmetry: translation along `axes[0]` and rotations about the other two axes fixed.
/// - rigid_diaphragm: translations along both `axes` fixed.
/// - fix: the listed `slots` fixed to `value`.
struct ConstraintSpec {
  ConstraintType type = ConstraintType::fix;
  std::optional<Edge> edge;
  std::optional<std::array<int, 2>> corner;  // (xi end, eta end), each 0 or 1
  std::vector<int> axes;                     // 0=x, 1=y, 2=z
  std::vector<Slot> slots;
  double value = 0.0;

  bool operator==(const ConstraintSpec&) const = default;
};

enum class LoadType { pressure, point };

struct LoadSpec {
  LoadType type = LoadType::point;
  double magnitude = 0.0;
  bool along_normal = false;  // pressure along the unit surface normal instead of `direction`
  Eigen::Vector3d direction = Eigen::Vector3d::Zero();
  std::array<double, 2> at{0.0, 0.0};  // point loads only

  bool operator==(const LoadSpec&) const = default;
};

/// Displacement component sampled at a parametric point, with reference values.
struct MonitorSpec {
  std::array<double, 2> at{0.0, 0.0};
  Slot dof = Slot::w;
  double reference = 0.0;
  std::optional<double> secondary_reference;

  bool operator==(const MonitorSpec&) const = default;
};

/// In-memory form of the JSON config document.
struct ModelConfig {
  std::string name;
  int degree_xi = 2;
  int degree_eta = 2;
  std::vector<double> knots_xi;
  std::vector<double> knots_eta;
  std::vector<Eigen::Vector3d> points;  // xi-fastest
  std::vector<double> weights;
  double thickness = 0.0;
  Material material;
  ShellKind kind = ShellKind::shell;
  std::vector<ConstraintSpec> bcs;
  std::vector<LoadSpec> loads;
  std::optional<MonitorSpec> monitor;

  bool operator==(const ModelConfig&) const = default;
};

/// Validated model plus the boundary conditions, loads and monitor it was declared with.
struct LoadedModel {
  ShellModel model;
  std::vector<ConstraintSpec> bcs;
  std::vector<LoadSpec> loads;
  std::optional<MonitorSpec> monitor;
};

/// Throws ConfigError with a descriptive message on any schema or invariant violation.
ModelConfig parse_config(const std::string& json_text);
ModelConfig read_config_file(const std::string& path);
std::string serialize_config(const ModelConfig& config);
void write_config_file(const ModelConfig& config, const std::string& path);

LoadedModel load_model(const ModelConfig& config);
LoadedModel load_model(const std::string& json_text);

/// Config document describing `model` with the given boundary data.
ModelConfig make_config(const std::string& name, const ShellModel& model, std::vector<ConstraintSpec> bcs,
                        std::vector<LoadSpec> loads, std::optional<MonitorSpec> monitor);

const char* to_string(Edge edge);
const char* to_string(Slot slot);
std::optional<Edge> edge_from_string(const std::string& s);
std::optional<Slot> slot_from_string(const std::string& s);

}  // namespace shellbar
