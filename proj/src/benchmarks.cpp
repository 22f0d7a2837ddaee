#include "shellbar/benchmarks.hpp"

#include <cmath>
#include <numbers>

#include "shellbar/error.hpp"

namespace shellbar {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

ShellModel quadratic_patch(const std::vector<Eigen::Vector3d>& points, const std::vector<double>& weights,
                           double thickness, Material material, ShellKind kind) {
  const KnotVector kv(2, {0, 0, 0, 1, 1, 1});
  ControlNet net{3, 3, points, weights};
  return ShellModel(kv, kv, std::move(net), thickness, material, kind);
}

ConstraintSpec on_edge(ConstraintType type, Edge edge, std::vector<int> axes = {}) {
  ConstraintSpec c;
  c.type = type;
  c.edge = edge;
  c.axes = std::move(axes);
  return c;
}

LoadSpec pressure(double magnitude, const Eigen::Vector3d& direction) {
  LoadSpec l;
  l.type = LoadType::pressure;
  l.magnitude = magnitude;
  l.direction = direction;
  return l;
}

LoadSpec point_load(std::array<double, 2> at, const Eigen::Vector3d& direction, double magnitude) {
  LoadSpec l;
  l.type = LoadType::point;
  l.at = at;
  l.direction = direction;
  l.magnitude = magnitude;
  return l;
}

}  // namespace

BenchmarkCase case_plate(double thickness, NetValues) {
  std::vector<Eigen::Vector3d> pts;
  for (double y : {0.0, 0.25, 0.5}) {
    for (double x : {0.5, 0.75, 1.0}) pts.emplace_back(x, y, 0.0);
  }
  BenchmarkCase c{"plate",
                  quadratic_patch(pts, std::vector<double>(9, 1.0), thickness, {200e9, 0.3}, ShellKind::plate),
                  {},
                  {},
                  {}};
  c.bcs = {on_edge(ConstraintType::symmetry, Edge::xi0, {0}), on_edge(ConstraintType::symmetry, Edge::eta1, {1}),
           on_edge(ConstraintType::simple_support, Edge::xi1), on_edge(ConstraintType::simple_support, Edge::eta0)};
  c.loads = {pressure(plate_pressure(thickness), {0.0, 0.0, -1.0})};
  c.monitor = {{0.0, 1.0}, Slot::w, -2.21804e-6, std::nullopt};
  return c;
}

BenchmarkCase case_scordelis(double thickness, NetValues values) {
  const bool exact = values == NetValues::exact;
  const double x2 = exact ? 3.0 * std::tan(20 * kDeg) : 1.091910703;
  const double x3 = exact ? 3.0 * std::sin(40 * kDeg) : 1.928362829;
  const double z3 = exact ? 3.0 * std::cos(40 * kDeg) : 2.298133329;
  const double w2 = exact ? std::cos(20 * kDeg) : 0.9396926208;
  std::vector<Eigen::Vector3d> pts;
  std::vector<double> wts;
  for (double y : {0.0, 1.5, 3.0}) {
    pts.emplace_back(0.0, y, 3.0);
    pts.emplace_back(x2, y, 3.0);
    pts.emplace_back(x3, y, z3);
    wts.insert(wts.end(), {1.0, w2, 1.0});
  }
  BenchmarkCase c{"scordelis", quadratic_patch(pts, wts, thickness, {30e9, 0.0}, ShellKind::shell), {}, {}, {}};
  c.bcs = {on_edge(ConstraintType::symmetry, Edge::xi0, {0}), on_edge(ConstraintType::symmetry, Edge::eta1, {1}),
           on_edge(ConstraintType::rigid_diaphragm, Edge::eta0, {0, 2})};
  c.loads = {pressure(6250.0, {0.0, 0.0, -1.0})};
  c.monitor = {{1.0, 1.0}, Slot::w, -0.0361776, -0.0361};
  return c;
}

BenchmarkCase case_cylinder(double thickness, NetValues values) {
  const double w2 = values == NetValues::exact ? std::cos(45 * kDeg) : 0.7071067812;
  std::vector<Eigen::Vector3d> pts;
  std::vector<double> wts;
  for (double y : {0.0, 1.5, 3.0}) {
    pts.emplace_back(0.0, y, 3.0);
    pts.emplace_back(3.0, y, 3.0);
    pts.emplace_back(3.0, y, 0.0);
    wts.insert(wts.end(), {1.0, w2, 1.0});
  }
  BenchmarkCase c{"cylinder", quadratic_patch(pts, wts, thickness, {30e9, 0.3}, ShellKind::shell), {}, {}, {}};
  c.bcs = {on_edge(ConstraintType::symmetry, Edge::xi0, {0}), on_edge(ConstraintType::symmetry, Edge::xi1, {2}),
           on_edge(ConstraintType::symmetry, Edge::eta1, {1}),
           on_edge(ConstraintType::rigid_diaphragm, Edge::eta0, {0, 2})};
  c.loads = {point_load({0.0, 1.0}, {0.0, 0.0, -1.0}, 0.25)};
  c.monitor = {{0.0, 1.0}, Slot::w, -1.85942e-7, std::nullopt};
  return c;
}

BenchmarkCase case_hemisphere(double thickness, NetValues values) {
  const bool exact = values == NetValues::exact;
  const double z2 = exact ? 10.0 * std::tan(36 * kDeg) : 7.265425281;
  const double r3 = exact ? 10.0 * std::sin(18 * kDeg) : 3.090169944;
  const double z3 = exact ? 10.0 * std::cos(18 * kDeg) : 9.510565163;
  const double c45 = exact ? std::cos(45 * kDeg) : 0.7071067810;
  const double c36 = exact ? std::cos(36 * kDeg) : 0.8090169942;
  const double c45c36 = exact ? c45 * c36 : 0.5720614025;
  const std::vector<Eigen::Vector3d> pts{{10, 0, 0},  {10, 10, 0},  {0, 10, 0},  {10, 0, z2}, {10, 10, z2},
                                         {0, 10, z2}, {r3, 0, z3}, {r3, r3, z3}, {0, r3, z3}};
  const std::vector<double> wts{1.0, c45, 1.0, c36, c45c36, c36, 1.0, c45, 1.0};
  BenchmarkCase c{"hemisphere", quadratic_patch(pts, wts, thickness, {68.25e6, 0.3}, ShellKind::shell), {}, {}, {}};
  ConstraintSpec pin;
  pin.type = ConstraintType::fix;
  pin.corner = std::array<int, 2>{0, 1};
  pin.slots = {Slot::w};
  c.bcs = {on_edge(ConstraintType::symmetry, Edge::xi0, {1}), on_edge(ConstraintType::symmetry, Edge::xi1, {0}), pin};
  c.loads = {point_load({0.0, 0.0}, {1.0, 0.0, 0.0}, 1.0), point_load({1.0, 0.0}, {0.0, -1.0, 0.0}, 1.0)};
  c.monitor = {{0.0, 0.0}, Slot::u, 0.0940, std::nullopt};
  return c;
}

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names{"plate", "scordelis", "cylinder", "hemisphere"};
  return names;
}

double default_thickness(const std::string& name) {
  if (name == "plate") return 1e-3;
  if (name == "scordelis" || name == "cylinder") return 0.03;
  if (name == "hemisphere") return 0.04;
  throw ConfigError("unknown case '" + name + "'");
}

BenchmarkCase make_case(const std::string& name, std::optional<double> thickness, NetValues values) {
  const double h = thickness.value_or(default_thickness(name));
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("thickness must be positive");
  if (name == "plate") return case_plate(h, values);
  if (name == "scordelis") return case_scordelis(h, values);
  if (name == "cylinder") return case_cylinder(h, values);
  return case_hemisphere(h, values);
}

double analytic_plate_deflection(double x, double y, double p, double L, double D, int terms) {
  if (terms < 1) throw ArgumentError("series needs at least one term");
  const double pi = std::numbers::pi;
  double sum = 0.0;
  for (int m = 1; m <= terms; m += 2) {
    const double sx = std::sin(m * pi * x / L);
    for (int n = 1; n <= terms; n += 2) {
      const double k = (m / L) * (m / L) + (n / L) * (n / L);
      sum += sx * std::sin(n * pi * y / L) / (m * n * k * k);
    }
  }
  return 16.0 * p / (std::pow(pi, 6) * D) * sum;
}

double analytic_plate_deflection(double x, double y, double p, double L, double D) {
  // Grow the square index range one odd shell max(m, n) = top at a time.
  const double pi = std::numbers::pi;
  auto term = [&](int m, int n) {
    const double q = (m / L) * (m / L) + (n / L) * (n / L);
    return std::sin(m * pi * x / L) * std::sin(n * pi * y / L) / (m * n * q * q);
  };
  double sum = 0.0;
  for (int top = 1; top < 200001; top += 2) {
    double shell = term(top, top);
    for (int k = 1; k < top; k += 2) shell += term(top, k) + term(k, top);
    sum += shell;
    if (top > 1 && std::abs(shell) <= 1e-12 * std::abs(sum)) break;
  }
  return 16.0 * p / (std::pow(pi, 6) * D) * sum;
}

ShellModel refine_case_model(const ShellModel& coarse, int degree, int mesh) {
  if (degree < coarse.degree_xi() || degree < coarse.degree_eta()) {
    throw ConfigError("degree must be at least the patch degree " + std::to_string(coarse.degree_xi()));
  }
  if (mesh < 1) throw ConfigError("mesh must be >= 1");
  return refine_uniform(elevate_to(coarse, degree), mesh, mesh);
}

Eigen::Vector3d monitor_location(const BenchmarkCase& c) {
  return surface_point(c.model, c.monitor.at[0], c.monitor.at[1]).x;
}

}  // namespace shellbar
