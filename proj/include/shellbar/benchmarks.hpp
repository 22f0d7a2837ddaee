#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shellbar/config.hpp"
#include "shellbar/shell_model.hpp"

namespace shellbar {

/// Which numbers seed the coarse control nets: closed-form trigonometric
/// values, or the rounded 10-digit decimals of the classic benchmark tables.
enum class NetValues { exact, table };

/// A benchmark problem on its coarsest (single-element, degree 2) patch.
struct BenchmarkCase {
  std::string name;
  ShellModel model;
  std::vector<ConstraintSpec> bcs;
  std::vector<LoadSpec> loads;
  MonitorSpec monitor;
};

/// Square plate quarter [0.5,1] x [0,0.5], simply supported outer edges,
/// pressure 1e7 h^3 downward; monitors the center deflection.
BenchmarkCase case_plate(double thickness = 1e-3, NetValues values = NetValues::exact);
/// Scordelis-Lo roof quarter (R = 3, 40 degree half angle), self-weight type
/// load 6250 N/m^2; monitors the free-edge midpoint.
BenchmarkCase case_scordelis(double thickness = 0.03, NetValues values = NetValues::exact);
/// Pinched cylinder octant (R = 3, half length 3), P = 0.25 at the top of the
/// symmetry section; monitors the deflection under the load.
BenchmarkCase case_cylinder(double thickness = 0.03, NetValues values = NetValues::exact);
/// Pinched hemisphere quadrant with an 18 degree hole (R = 10), opposite unit
/// loads on the equator; monitors the radial displacement at the pulled point.
BenchmarkCase case_hemisphere(double thickness = 0.04, NetValues values = NetValues::exact);

const std::vector<std::string>& case_names();
/// Throws ConfigError for unknown names. `thickness` defaults per case.
BenchmarkCase make_case(const std::string& name, std::optional<double> thickness = std::nullopt,
                        NetValues values = NetValues::exact);
double default_thickness(const std::string& name);

/// Plate pressure that keeps the transverse deflection thickness independent.
inline double plate_pressure(double thickness) { return 1e7 * thickness * thickness * thickness; }

/// Kirchhoff deflection of a simply supported square plate [0,L]^2 under
/// uniform pressure p, odd-term double sine series with m, n <= terms.
/// D = E h^3 / (12 (1 - nu^2)).
double analytic_plate_deflection(double x, double y, double p, double L, double D, int terms);
/// Same series, truncated once the last added odd-diagonal shell contributes
/// less than 1e-12 of the running sum.
double analytic_plate_deflection(double x, double y, double p, double L, double D);

/// Degree elevation to `degree` followed by uniform refinement to mesh x mesh.
ShellModel refine_case_model(const ShellModel& coarse, int degree, int mesh);

/// Physical coordinates and reference of the monitor in the coarse model.
Eigen::Vector3d monitor_location(const BenchmarkCase& c);

}  // namespace shellbar
