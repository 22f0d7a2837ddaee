#include "shellbar/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "shellbar/benchmarks.hpp"
#include "shellbar/config.hpp"
#include "shellbar/error.hpp"
#include "shellbar/field_export.hpp"
#include "shellbar/results_io.hpp"
#include "shellbar/study.hpp"
#include "shellbar/timoshenko.hpp"

namespace shellbar {
namespace {

// Options shared by run, sweep and field.
struct ModelOptions {
  std::string case_name;
  std::string config_path;
  std::string method = "glb";
  int degree = 2;
  int mesh = 8;
  std::optional<double> thickness;
  std::string distort_mode;
  double distort_stage = 0.0;
  double drilling_penalty = 1e-8;
  int thickness_points = 2;
  bool rank = false;
  CLI::Option* degree_opt = nullptr;
  CLI::Option* mesh_opt = nullptr;
  CLI::Option* stage_opt = nullptr;
};

void add_source_options(CLI::App* app, ModelOptions& o) {
  auto* c = app->add_option("--case", o.case_name, "Built-in benchmark")
                ->check(CLI::IsMember({"plate", "scordelis", "cylinder", "hemisphere"}));
  auto* f = app->add_option("--config", o.config_path, "JSON model file")->check(CLI::ExistingFile);
  c->excludes(f);
  f->excludes(c);
}

void add_analysis_options(CLI::App* app, ModelOptions& o, bool single_method) {
  if (single_method) {
    app->add_option("--method", o.method, "iga, lb, glb or cbar")->capture_default_str()
        ->check(CLI::IsMember({"iga", "lb", "glb", "cbar"}));
    o.degree_opt = app->add_option("--degree", o.degree, "Polynomial degree (both directions)");
    o.mesh_opt = app->add_option("--mesh", o.mesh, "Elements per direction");
    app->add_option("--thickness", o.thickness, "Shell thickness [m]");
  }
  app->add_option("--distort-mode", o.distort_mode, "Plate control-net distortion")
      ->check(CLI::IsMember({"expansion", "rotation"}));
  o.stage_opt = app->add_option("--distort-stage", o.distort_stage, "Distortion stage e or r");
  app->add_option("--drilling-penalty", o.drilling_penalty, "Drilling stiffness factor");
  app->add_option("--thickness-points", o.thickness_points, "Gauss points through the thickness")
      ->check(CLI::Range(1, 10));
  app->add_flag("--rank", o.rank, "Report the stiffness rank (small systems only)");
}

RunSpec base_spec(const ModelOptions& o) {
  RunSpec s;
  s.case_name = o.case_name;
  s.method = *method_from_string(o.method);
  s.degree = o.degree;
  s.mesh = o.mesh;
  s.thickness = o.thickness;
  s.drilling_penalty = o.drilling_penalty;
  s.thickness_points = o.thickness_points;
  s.compute_rank = o.rank;
  s.threads = configured_threads();
  if (!o.distort_mode.empty()) {
    DistortionSpec d;
    d.mode = *distortion_mode_from_string(o.distort_mode);
    d.stage = o.distort_stage;
    s.distortion = d;
  } else if (o.stage_opt != nullptr && o.stage_opt->count() > 0) {
    throw ConfigError("--distort-stage needs --distort-mode");
  }
  return s;
}

void require_source(const ModelOptions& o) {
  if (o.case_name.empty() == o.config_path.empty()) throw ConfigError("give exactly one of --case or --config");
}

// Config-file model, elevated/refined only when asked to.
Analysis config_analysis(const ModelOptions& o, const RunSpec& spec) {
  if (spec.distortion) throw ConfigError("distortion applies to the built-in plate only");
  LoadedModel loaded = load_model(read_config_file(o.config_path));
  ShellModel model = loaded.model;
  if (o.thickness) model = model.with_thickness(*o.thickness);
  if (o.degree_opt->count() > 0) {
    if (spec.degree < model.degree_xi() || spec.degree < model.degree_eta()) {
      throw ConfigError("--degree is below the model's degree");
    }
    model = elevate_to(model, spec.degree);
  }
  if (o.mesh_opt->count() > 0) model = refine_uniform(model, spec.mesh, spec.mesh);
  return {model, loaded.bcs, loaded.loads, loaded.monitor};
}

std::string config_name(const ModelOptions& o) {
  const ModelConfig c = read_config_file(o.config_path);
  return c.name.empty() ? "config" : c.name;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void print_result(std::ostream& out, const StudyResult& r) {
  out << r.case_name << "  method=" << to_string(r.method) << " degree=" << r.degree << " mesh=" << r.mesh
      << " thickness=" << format_number(r.thickness);
  if (!r.error.empty()) {
    out << "  FAILED: " << r.error << '\n';
    return;
  }
  out << "  monitor=" << format_number(r.monitor) << " normalized=" << format_number(r.normalized)
      << " rel_error=" << format_number(r.rel_error);
  if (r.rank >= 0) out << " rank=" << r.rank;
  out << '\n';
  if (!r.warning.empty()) out << "  warning: " << r.warning << '\n';
}

int cmd_run(const ModelOptions& o, const std::string& out_path, bool timing, std::ostream& out) {
  require_source(o);
  const RunSpec spec = base_spec(o);
  StudyResult r;
  if (!o.config_path.empty()) {
    r = execute(config_name(o), config_analysis(o, spec), spec);
  } else {
    r = execute(spec);
  }
  print_result(out, r);
  if (!out_path.empty()) write_results({r}, out_path, timing);
  return 0;
}

int cmd_sweep(const ModelOptions& o, const std::vector<std::string>& cases, const std::vector<std::string>& methods,
              const std::vector<int>& degrees, const std::vector<int>& meshes,
              const std::vector<double>& thicknesses, const std::string& out_path, bool timing,
              std::ostream& out) {
  RunSpec base = base_spec(o);
  base.threads = 1;  // concurrency goes to the runs instead
  std::vector<Method> ms;
  for (const auto& m : methods) {
    const auto parsed = method_from_string(m);
    if (!parsed) throw ConfigError("unknown method '" + m + "'");
    ms.push_back(*parsed);
  }
  std::vector<std::optional<double>> hs;
  for (double h : thicknesses) hs.emplace_back(h);
  if (hs.empty()) hs.emplace_back(std::nullopt);
  for (const auto& c : cases) default_thickness(c);  // validates the name
  const auto results = run_study(cases, ms, degrees, meshes, hs, base);
  bool failed = false;
  for (const auto& r : results) {
    print_result(out, r);
    failed = failed || !r.error.empty();
  }
  if (!out_path.empty()) write_results(results, out_path, timing);
  return failed ? 2 : 0;
}

int cmd_field(const ModelOptions& o, int density, const std::string& format, bool deformed,
              const std::string& out_path, std::ostream& out) {
  require_source(o);
  const RunSpec spec = base_spec(o);
  const Analysis analysis = o.config_path.empty() ? prepare_case(spec) : config_analysis(o, spec);
  const AnalysisOutput result = analyze(analysis, spec.method, spec);
  const FieldExport field = sample_field(analysis.model, result.displacement, density, deformed);
  export_field(field, out_path, *field_format_from_string(format));
  out << "wrote " << field.points.size() << " samples to " << out_path << '\n';
  if (result.monitor) out << "monitor=" << format_number(*result.monitor) << '\n';
  return 0;
}

int cmd_config(const std::string& case_name, std::optional<double> thickness, const std::string& net,
               const std::string& out_path, std::ostream& out) {
  const BenchmarkCase c =
      make_case(case_name, thickness, net == "table" ? NetValues::table : NetValues::exact);
  const ModelConfig cfg = make_config(c.name, c.model, c.bcs, c.loads, c.monitor);
  if (out_path.empty()) {
    out << serialize_config(cfg) << '\n';
  } else {
    write_config_file(cfg, out_path);
    out << "wrote " << out_path << '\n';
  }
  return 0;
}

int cmd_timoshenko(std::ostream& out) {
  const BeamShear projected = timoshenko_demo();
  const BeamShear original = timoshenko_shear(0.0);
  const char* names[4] = {"w1", "w2", "theta1", "theta2"};
  out << "projected shear strain coefficients on (w1, w2, theta1, theta2):\n";
  for (int i = 0; i < 4; ++i) out << "  " << names[i] << " " << format_number(projected[i]) << '\n';
  out << "original shear strain at x = 0:\n";
  for (int i = 0; i < 4; ++i) out << "  " << names[i] << " " << format_number(original[i]) << '\n';
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isogeometric Reissner-Mindlin shell analysis with local B-bar projection", "shellbar"};
  app.require_subcommand(1);

  ModelOptions run_o, sweep_o, field_o;
  std::string run_out, sweep_out, field_out, config_out;
  bool run_timing = false, sweep_timing = false, deformed = false;
  std::vector<std::string> sweep_cases, sweep_methods{"iga", "glb"};
  std::vector<int> sweep_degrees{2}, sweep_meshes{2, 4, 8, 16};
  std::vector<double> sweep_thicknesses;
  int density = 2;
  std::string format = "vtk";
  std::string config_case, config_net = "exact";
  std::optional<double> config_thickness;

  auto* run = app.add_subcommand("run", "Analyze one case and print the monitored displacement");
  add_source_options(run, run_o);
  add_analysis_options(run, run_o, true);
  run->add_option("--out", run_out, "Results CSV");
  run->add_flag("--timing", run_timing, "Fill the seconds column");

  auto* sweep = app.add_subcommand("sweep", "Run every method/degree/mesh/thickness combination");
  sweep->add_option("--case", sweep_cases, "Benchmark case(s)")->delimiter(',')->required()
      ->check(CLI::IsMember({"plate", "scordelis", "cylinder", "hemisphere"}));
  sweep->add_option("--methods", sweep_methods, "Comma-separated methods")->delimiter(',')
      ->check(CLI::IsMember({"iga", "lb", "glb", "cbar"}));
  sweep->add_option("--degrees", sweep_degrees, "Comma-separated degrees")->delimiter(',');
  sweep->add_option("--meshes", sweep_meshes, "Comma-separated elements per direction")->delimiter(',');
  sweep->add_option("--thicknesses", sweep_thicknesses, "Comma-separated thicknesses")->delimiter(',');
  add_analysis_options(sweep, sweep_o, false);
  sweep->add_option("--out", sweep_out, "Results CSV");
  sweep->add_flag("--timing", sweep_timing, "Fill the seconds column");

  auto* field = app.add_subcommand("field", "Export the solution field (legacy VTK or CSV)");
  add_source_options(field, field_o);
  add_analysis_options(field, field_o, true);
  field->add_option("--density", density, "Samples per element and direction")->check(CLI::PositiveNumber);
  field->add_option("--format", format, "vtk or csv")->check(CLI::IsMember({"vtk", "csv"}));
  field->add_flag("--deformed", deformed, "Place samples on the deformed mid-surface");
  field->add_option("--out", field_out, "Output file")->required();

  auto* config = app.add_subcommand("config", "Write a built-in case as a JSON model file");
  config->add_option("--case", config_case, "Benchmark case")->required()
      ->check(CLI::IsMember({"plate", "scordelis", "cylinder", "hemisphere"}));
  config->add_option("--thickness", config_thickness, "Shell thickness [m]");
  config->add_option("--net", config_net, "exact or table control values")
      ->check(CLI::IsMember({"exact", "table"}));
  config->add_option("--out", config_out, "Output file (stdout when omitted)");

  auto* demo = app.add_subcommand("demo", "Small worked examples");
  demo->require_subcommand(1);
  auto* timo = demo->add_subcommand("timoshenko", "Projected shear strain of the two-node beam");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) return cmd_run(run_o, run_out, run_timing, out);
    if (*sweep) {
      sweep_o.case_name = sweep_cases.front();
      return cmd_sweep(sweep_o, sweep_cases, sweep_methods, sweep_degrees, sweep_meshes, sweep_thicknesses,
                       sweep_out, sweep_timing, out);
    }
    if (*field) return cmd_field(field_o, density, format, deformed, field_out, out);
    if (*config) return cmd_config(config_case, config_thickness, config_net, config_out, out);
    if (*timo) return cmd_timoshenko(out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {  // ArgumentError
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {  // DomainError
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {  // NumericalError, GeometryError
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace shellbar
