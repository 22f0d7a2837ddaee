#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shellbar/benchmarks.hpp"
#include "shellbar/distortion.hpp"
#include "shellbar/quadrature.hpp"

namespace shellbar {

/// One analysis of a benchmark case.
struct RunSpec {
  std::string case_name;
  Method method = Method::glb;
  int degree = 2;
  int mesh = 8;
  std::optional<double> thickness;  // case default when empty
  std::optional<DistortionSpec> distortion;
  double drilling_penalty = 1e-8;
  int thickness_points = 2;
  bool compute_rank = false;
  int rank_limit = 2000;  // free DOFs above which the rank is skipped
  int threads = 1;        // element-loop workers inside this run
};

struct StudyResult {
  std::string case_name;
  Method method = Method::iga;
  int degree = 0;
  int mesh = 0;
  double thickness = 0.0;
  double monitor = 0.0;
  double normalized = 0.0;
  double rel_error = 0.0;
  int rank = -1;         // -1 when not computed
  double seconds = 0.0;
  std::string error;     // empty on success
  std::string warning;
};

/// Displacement component `monitor.dof` of the solution at the monitor point.
double monitor_value(const ShellModel& model, const Eigen::VectorXd& displacement, const MonitorSpec& monitor);

/// Boundary data plus a model already at its analysis resolution.
struct Analysis {
  ShellModel model;
  std::vector<ConstraintSpec> bcs;
  std::vector<LoadSpec> loads;
  std::optional<MonitorSpec> monitor;
};

struct AnalysisOutput {
  Eigen::VectorXd displacement;  // every slot
  std::optional<double> monitor;
  int rank = -1;
  std::optional<std::string> warning;
};

/// Assemble, load, solve and sample. Errors propagate.
AnalysisOutput analyze(const Analysis& analysis, Method method, const RunSpec& settings);

/// Case at the requested degree, mesh and thickness (and distortion for the plate).
Analysis prepare_case(const RunSpec& spec);

/// Runs a benchmark case; errors propagate.
StudyResult execute(const RunSpec& spec);
/// Runs a prepared analysis under `name` (its monitor is required); errors propagate.
StudyResult execute(const std::string& name, const Analysis& analysis, const RunSpec& spec);

/// Never throws for analysis failures; they are reported in `error`.
StudyResult run_single(const RunSpec& spec);

/// Every combination of the inputs, executed on up to `workers` threads
/// (SHELLBAR_THREADS caps it when set) and returned in sorted order.
std::vector<StudyResult> run_study(const std::vector<std::string>& cases, const std::vector<Method>& methods,
                                   const std::vector<int>& degrees, const std::vector<int>& meshes,
                                   const std::vector<std::optional<double>>& thicknesses, const RunSpec& base,
                                   int workers = 0);

/// Orders by case, method, degree, mesh, thickness.
void sort_results(std::vector<StudyResult>& results);

/// Worker count from SHELLBAR_THREADS (falls back to hardware concurrency).
int configured_threads();

}  // namespace shellbar
