#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "shellbar/shell_model.hpp"

namespace shellbar {

enum class FieldFormat { vtk, csv };

std::optional<FieldFormat> field_format_from_string(const std::string& s);

/// Solution sampled on density x density cell-centred points per element,
/// arranged as a structured grid (xi fastest) over the whole patch.
struct FieldExport {
  int nx = 0;  // samples along xi
  int ny = 0;  // samples along eta
  std::vector<std::string> names;  // u, v, w, theta_x, theta_y[, theta_z]
  std::vector<Eigen::Vector3d> points;
  Eigen::MatrixXd values;  // one row per point, one column per name
};

/// `displacement` covers every slot. With `deformed`, points are displaced
/// by the translation field.
FieldExport sample_field(const ShellModel& model, const Eigen::VectorXd& displacement, int density,
                         bool deformed = false);

std::string format_vtk(const FieldExport& field, const std::string& title = "shellbar field");
std::string format_csv(const FieldExport& field);

/// Throws IoError when the file cannot be written.
void export_field(const FieldExport& field, const std::string& path, FieldFormat format);

}  // namespace shellbar
