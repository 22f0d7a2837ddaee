#include "shellbar/field_export.hpp"

#include <cstdio>
#include <fstream>

#include "shellbar/error.hpp"
#include "shellbar/strain_operator.hpp"

namespace shellbar {
namespace {

void append(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::optional<FieldFormat> field_format_from_string(const std::string& s) {
  if (s == "vtk") return FieldFormat::vtk;
  if (s == "csv") return FieldFormat::csv;
  return std::nullopt;
}

FieldExport sample_field(const ShellModel& model, const Eigen::VectorXd& displacement, int density, bool deformed) {
  if (density < 1) throw ArgumentError("sampling density must be >= 1");
  const int slots = slots_per_point(model.kind());
  if (displacement.size() != model.num_control_points() * slots) {
    throw ArgumentError("displacement vector does not match the model");
  }
  const auto& basis = model.basis();
  const int ex = basis.elements_xi();
  const int ey = basis.elements_eta();
  const auto elements = basis.elements();

  FieldExport f;
  f.nx = ex * density;
  f.ny = ey * density;
  f.names = {"u", "v", "w", "theta_x", "theta_y"};
  if (slots == 6) f.names.emplace_back("theta_z");
  f.points.resize(static_cast<std::size_t>(f.nx) * f.ny);
  f.values = Eigen::MatrixXd::Zero(f.nx * f.ny, slots);
  for (const ElementSpan& el : elements) {
    for (int b = 0; b < density; ++b) {
      for (int a = 0; a < density; ++a) {
        const double xi = el.xi_range.first + el.xi_length() * (a + 0.5) / density;
        const double eta = el.eta_range.first + el.eta_length() * (b + 0.5) / density;
        const BasisSample s = basis.evaluate(el, xi, eta);
        const int row = (el.ey * density + b) * f.nx + el.ex * density + a;
        Eigen::Vector3d x = Eigen::Vector3d::Zero();
        for (std::size_t k = 0; k < s.cp.size(); ++k) {
          x += s.r[k] * model.net().points[s.cp[k]];
          f.values.row(row) += s.r[k] * displacement.segment(s.cp[k] * slots, slots).transpose();
        }
        if (deformed) x += f.values.row(row).head<3>().transpose();
        f.points[row] = x;
      }
    }
  }
  return f;
}

std::string format_vtk(const FieldExport& f, const std::string& title) {
  std::string out = "# vtk DataFile Version 3.0\n" + title + "\nASCII\nDATASET STRUCTURED_GRID\n";
  out += "DIMENSIONS " + std::to_string(f.nx) + " " + std::to_string(f.ny) + " 1\n";
  out += "POINTS " + std::to_string(f.points.size()) + " double\n";
  for (const auto& p : f.points) {
    for (int c = 0; c < 3; ++c) {
      append(out, p[c]);
      out += c < 2 ? ' ' : '\n';
    }
  }
  out += "POINT_DATA " + std::to_string(f.points.size()) + "\n";
  for (std::size_t c = 0; c < f.names.size(); ++c) {
    out += "SCALARS " + f.names[c] + " double 1\nLOOKUP_TABLE default\n";
    for (Eigen::Index r = 0; r < f.values.rows(); ++r) {
      append(out, f.values(r, static_cast<Eigen::Index>(c)));
      out += '\n';
    }
  }
  return out;
}

std::string format_csv(const FieldExport& f) {
  std::string out = "x,y,z";
  for (const auto& n : f.names) out += "," + n;
  out += '\n';
  for (std::size_t r = 0; r < f.points.size(); ++r) {
    for (int c = 0; c < 3; ++c) {
      if (c > 0) out += ',';
      append(out, f.points[r][c]);
    }
    for (Eigen::Index c = 0; c < f.values.cols(); ++c) {
      out += ',';
      append(out, f.values(static_cast<Eigen::Index>(r), c));
    }
    out += '\n';
  }
  return out;
}

void export_field(const FieldExport& field, const std::string& path, FieldFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << (format == FieldFormat::vtk ? format_vtk(field) : format_csv(field));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace shellbar
