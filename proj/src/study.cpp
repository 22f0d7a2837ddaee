#include "shellbar/study.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <tuple>

#include "shellbar/assembly.hpp"
#include "shellbar/error.hpp"
#include "shellbar/solver.hpp"
#include "shellbar/strain_operator.hpp"

namespace shellbar {

double monitor_value(const ShellModel& model, const Eigen::VectorXd& displacement, const MonitorSpec& monitor) {
  const int slots = slots_per_point(model.kind());
  const int slot = static_cast<int>(monitor.dof);
  if (slot >= slots) throw ConfigError("monitor slot not available for this model kind");
  const BasisSample s = model.basis().evaluate(monitor.at[0], monitor.at[1]);
  double value = 0.0;
  for (std::size_t a = 0; a < s.cp.size(); ++a) value += s.r[a] * displacement[s.cp[a] * slots + slot];
  return value;
}

AnalysisOutput analyze(const Analysis& analysis, Method method, const RunSpec& settings) {
  const DofMap dofs = build_dof_map(analysis.model, analysis.bcs);
  AssemblyOptions options;
  options.method = method;
  options.thickness_points = settings.thickness_points;
  options.threads = settings.threads;
  GlobalSystem system = assemble(analysis.model, dofs, options);
  apply_loads(system, analysis.model, analysis.loads);
  AnalysisOutput out;
  out.warning = system.warning;
  out.displacement = solve(system, analysis.model, SolveOptions{settings.drilling_penalty});
  if (analysis.monitor) out.monitor = monitor_value(analysis.model, out.displacement, *analysis.monitor);
  if (settings.compute_rank && dofs.num_free() <= settings.rank_limit) out.rank = stiffness_rank(system);
  return out;
}

Analysis prepare_case(const RunSpec& spec) {
  const BenchmarkCase c = make_case(spec.case_name, spec.thickness);
  if (spec.distortion) {
    if (c.name != "plate") throw ConfigError("mesh distortion is only defined for the plate");
    return {distorted_plate_model(c.model, *spec.distortion, spec.degree, spec.mesh), c.bcs, c.loads, c.monitor};
  }
  return {refine_case_model(c.model, spec.degree, spec.mesh), c.bcs, c.loads, c.monitor};
}

StudyResult execute(const std::string& name, const Analysis& analysis, const RunSpec& spec) {
  if (!analysis.monitor) throw ConfigError("a monitor is required to report a result");
  const auto start = std::chrono::steady_clock::now();
  StudyResult r;
  r.case_name = name;
  r.method = spec.method;
  r.degree = std::max(analysis.model.degree_xi(), analysis.model.degree_eta());
  r.mesh = std::max(analysis.model.basis().elements_xi(), analysis.model.basis().elements_eta());
  r.thickness = analysis.model.thickness();
  const AnalysisOutput out = analyze(analysis, spec.method, spec);
  const double reference = analysis.monitor->reference;
  r.monitor = *out.monitor;
  r.normalized = reference != 0.0 ? r.monitor / reference : std::nan("");
  r.rel_error = reference != 0.0 ? std::abs(r.monitor - reference) / std::abs(reference) : std::nan("");
  r.rank = out.rank;
  if (out.warning) r.warning = *out.warning;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

StudyResult execute(const RunSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  StudyResult r = execute(spec.case_name, prepare_case(spec), spec);
  r.degree = spec.degree;
  r.mesh = spec.mesh;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

StudyResult run_single(const RunSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  try {
    return execute(spec);
  } catch (const std::exception& e) {
    StudyResult r;
    r.case_name = spec.case_name;
    r.method = spec.method;
    r.degree = spec.degree;
    r.mesh = spec.mesh;
    try {
      r.thickness = spec.thickness.value_or(default_thickness(spec.case_name));
    } catch (const std::exception&) {
      r.thickness = std::nan("");
    }
    r.monitor = r.normalized = r.rel_error = std::nan("");
    r.error = e.what();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
}

void sort_results(std::vector<StudyResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const StudyResult& a, const StudyResult& b) {
    return std::forward_as_tuple(a.case_name, std::string(to_string(a.method)), a.degree, a.mesh, a.thickness) <
           std::forward_as_tuple(b.case_name, std::string(to_string(b.method)), b.degree, b.mesh, b.thickness);
  });
}

int configured_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("SHELLBAR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, 256));
  }
  return hw;
}

std::vector<StudyResult> run_study(const std::vector<std::string>& cases, const std::vector<Method>& methods,
                                   const std::vector<int>& degrees, const std::vector<int>& meshes,
                                   const std::vector<std::optional<double>>& thicknesses, const RunSpec& base,
                                   int workers) {
  std::vector<RunSpec> specs;
  for (const auto& c : cases) {
    for (Method m : methods) {
      for (int d : degrees) {
        for (int mesh : meshes) {
          for (const auto& h : thicknesses) {
            RunSpec s = base;
            s.case_name = c;
            s.method = m;
            s.degree = d;
            s.mesh = mesh;
            s.thickness = h;
            specs.push_back(s);
          }
        }
      }
    }
  }
  int cap = configured_threads();
  if (workers > 0) cap = std::min(cap, workers);
  const std::size_t pool_size = std::clamp<std::size_t>(static_cast<std::size_t>(cap), 1, std::max<std::size_t>(specs.size(), 1));

  std::vector<StudyResult> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) results[i] = run_single(specs[i]);
  };
  if (pool_size == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < pool_size; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  sort_results(results);
  return results;
}

}  // namespace shellbar
