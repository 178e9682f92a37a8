#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "horizon/io.hpp"
#include "horizon/models.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNoConvergence = 2;

struct CommonArgs {
  std::string spec_file;
  std::string model;
  std::string expr_text;
  std::string feasible_if;
  double alpha = 0.0, beta = 0.0, k0 = 0.0, a = 0.0, b = 0.0;
  double x0 = 0.0, lower = 0.0, upper = 0.0;
  std::vector<std::string> extra_params;  // name=value
  std::string out;
  std::string format = "json";
  bool emit_plot_data = false;
  double tol = 1e-10;
  std::uint64_t seed = 20107;

  CLI::Option *opt_model = nullptr, *opt_expr = nullptr, *opt_x0 = nullptr,
              *opt_lower = nullptr, *opt_upper = nullptr,
              *opt_feasible = nullptr;
  CLI::Option *opt_alpha = nullptr, *opt_beta = nullptr, *opt_k0 = nullptr,
              *opt_a = nullptr, *opt_b = nullptr;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--spec", args.spec_file, "Problem spec JSON file");
  args.opt_model =
      cmd->add_option("--model", args.model,
                      "Built-in model: growth | counterexample | custom");
  args.opt_expr = cmd->add_option(
      "--expr", args.expr_text, "Return function v(x, y, t) as an expression");
  args.opt_feasible = cmd->add_option("--feasible-if", args.feasible_if,
                                      "Explicit domain inequality");
  args.opt_alpha = cmd->add_option("--alpha", args.alpha, "growth: alpha");
  args.opt_beta = cmd->add_option("--beta", args.beta, "growth: beta");
  args.opt_k0 = cmd->add_option("--k0", args.k0, "growth: k0");
  args.opt_a = cmd->add_option("--a", args.a, "counterexample: a");
  args.opt_b = cmd->add_option("--b", args.b, "counterexample: b");
  args.opt_x0 = cmd->add_option("--x0", args.x0, "custom: start state");
  args.opt_lower = cmd->add_option("--lower", args.lower, "lower state bound");
  args.opt_upper = cmd->add_option("--upper", args.upper, "upper state bound");
  cmd->add_option("--out", args.out, "Output file (stdout when omitted)");
  cmd->add_option("--format", args.format, "Report format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--emit-plot-data", args.emit_plot_data,
                "Also write the series CSV next to --out");
  cmd->add_option("--tol", args.tol, "Newton residual tolerance");
  cmd->add_option("--seed", args.seed, "Seed for sampling diagnostics");
}

void override_param(horizon::ProblemSpec& spec, const CLI::Option* opt,
                    const char* name, double value) {
  if (!opt || opt->count() == 0) return;
  if (spec.params.count(name) && spec.params[name] != value)
    std::cerr << "warning: flag --" << name << " overrides spec value\n";
  spec.params[name] = value;
}

horizon::ProblemSpec resolve_spec(const CommonArgs& args) {
  horizon::ProblemSpec spec;
  if (!args.spec_file.empty()) {
    spec = horizon::read_problem_spec(args.spec_file);
    if (args.opt_model->count() > 0 && args.model != spec.model) {
      std::cerr << "warning: flag --model overrides spec model\n";
      spec.model = args.model;
    }
  } else {
    if (args.opt_expr->count() > 0) {
      spec.model = "custom";
    } else if (args.opt_model->count() > 0) {
      spec.model = args.model;
    } else {
      throw horizon::ParameterError("one of --spec, --model, --expr required");
    }
    if (args.opt_model->count() > 0) spec.model = args.model;
  }
  if (args.opt_expr->count() > 0) spec.expr = args.expr_text;
  if (args.opt_feasible->count() > 0) spec.feasible_if = args.feasible_if;
  if (args.opt_x0->count() > 0) spec.x0 = args.x0;
  if (args.opt_lower->count() > 0) spec.lower = args.lower;
  if (args.opt_upper->count() > 0) spec.upper = args.upper;
  override_param(spec, args.opt_alpha, "alpha", args.alpha);
  override_param(spec, args.opt_beta, "beta", args.beta);
  override_param(spec, args.opt_k0, "k0", args.k0);
  override_param(spec, args.opt_a, "a", args.a);
  override_param(spec, args.opt_b, "b", args.b);
  return spec;
}

void emit(const CommonArgs& args, const nlohmann::json& report,
          const std::string& series_csv) {
  const std::string json_text = report.dump(2) + "\n";
  if (args.out.empty()) {
    std::cout << (args.format == "csv" ? series_csv : json_text);
    return;
  }
  horizon::write_file_atomic(args.out,
                             args.format == "csv" ? series_csv : json_text);
  if (args.emit_plot_data && !series_csv.empty()) {
    std::filesystem::path csv_file(args.out);
    csv_file.replace_extension(".csv");
    horizon::write_file_atomic(csv_file, series_csv);
  }
}

std::vector<int> resolve_schedule(const std::string& text, int base,
                                  int max_T) {
  if (text == "doubling") return horizon::doubling_schedule(base, max_T);
  if (text.rfind("linear:", 0) == 0) {
    const int step = std::stoi(text.substr(7));
    return horizon::linear_schedule(step, max_T);
  }
  throw horizon::ParameterError(
      "--schedule must be 'doubling' or 'linear:<step>'");
}

// ---------------------------------------------------------------------------

int run_solve(const CommonArgs& args, int T) {
  const horizon::Problem problem =
      horizon::build_problem(resolve_spec(args));
  horizon::NewtonOptions opts;
  opts.tol = args.tol;
  const horizon::SolveReport report = horizon::solve_finite(problem, T, opts);
  emit(args, horizon::to_json(report), horizon::path_to_csv(report.path));
  if (!report.converged) {
    std::cerr << "solve: " << report.message << "\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

int run_limit(const CommonArgs& args, int window, int max_T,
              const std::string& schedule_text, double limit_tol) {
  const horizon::Problem problem =
      horizon::build_problem(resolve_spec(args));
  horizon::NewtonOptions opts;
  opts.tol = args.tol;

  const std::vector<int> schedule =
      resolve_schedule(schedule_text, std::max(window, 1), max_T);
  const horizon::LimitReport report =
      horizon::limit_path(problem, window, schedule, limit_tol, opts);

  // Gap series over a linear grid up to the window, where the limit path is
  // available.
  const int gap_step = std::max(1, window / 16);
  const horizon::GapReport gap = horizon::theorem1_gap(
      problem, report.limit_path,
      horizon::linear_schedule(gap_step, std::max(window, 1)), opts);

  emit(args, horizon::to_json(report, gap), horizon::gap_to_csv(gap));
  if (!report.converged) {
    std::cerr << "limit: pointwise tolerance not met within the schedule\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

int run_tvc(const CommonArgs& args, int Tmax, const std::string& path_file,
            int horizon_flag, bool diagnostics) {
  const horizon::Problem problem =
      horizon::build_problem(resolve_spec(args));
  horizon::NewtonOptions opts;
  opts.tol = args.tol;

  horizon::Path path;
  if (!path_file.empty()) {
    path = horizon::read_path_csv(path_file);
    if (path[0] != problem.x0)
      throw horizon::ParameterError(
          "tvc: path starts at " + horizon::format_double(path[0]) +
          " but the problem x0 is " + horizon::format_double(problem.x0));
  } else {
    const int T = horizon_flag > 0 ? horizon_flag : Tmax;
    const horizon::SolveReport solved =
        horizon::solve_finite(problem, T, opts);
    if (!solved.converged) {
      std::cerr << "tvc: " << solved.message << "\n";
      return kExitNoConvergence;
    }
    path = solved.path;
  }

  const horizon::TvcReport report = horizon::tvc_report(problem, path, Tmax);
  nlohmann::json j = horizon::to_json(report, Tmax);
  if (diagnostics) {
    double lo, hi;
    if (problem.has_finite_bounds()) {
      const double width = problem.upper - problem.lower;
      lo = problem.lower + 0.05 * width;
      hi = problem.upper - 0.05 * width;
    } else {
      lo = problem.x0 - 1.0;
      hi = problem.x0 + 1.0;
    }
    j["diagnostics"] = horizon::to_json(horizon::assumption_diagnostics(
        problem, lo, hi, 10000, args.seed));
  }
  emit(args, j, horizon::tvc_to_csv(report));
  return kExitOk;
}

int run_compare(const CommonArgs& args, const std::string& path_a_file,
                const std::string& path_b_file, const std::string& criterion,
                int Tmax, const std::string& schedule_text) {
  const horizon::Problem problem =
      horizon::build_problem(resolve_spec(args));
  const horizon::Path a = horizon::read_path_csv(path_a_file);
  const horizon::Path b = horizon::read_path_csv(path_b_file);
  const std::vector<int> schedule = resolve_schedule(schedule_text, 1, Tmax);

  const horizon::CompareReport report =
      criterion == "brock"
          ? horizon::compare_brock(problem, a, b, schedule)
          : horizon::compare_modified(problem, a, b, schedule);
  emit(args, horizon::to_json(report), horizon::compare_to_csv(report));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "horizon: finite-horizon truncation solver and transversality-"
      "condition auditor for discrete-time infinite-horizon problems"};
  app.require_subcommand(1);

  CommonArgs solve_args, limit_args, tvc_args, compare_args;

  auto* solve = app.add_subcommand(
      "solve", "Solve the horizon-T eating-up truncation");
  int solve_T = 16;
  add_common(solve, solve_args);
  solve->add_option("--horizon", solve_T, "Truncation horizon T")
      ->required();

  auto* limit = app.add_subcommand(
      "limit", "Horizon-limit path and optimality-gap series");
  int limit_window = 20, limit_max_T = 256;
  std::string limit_schedule = "doubling";
  double limit_tol = 1e-8;
  add_common(limit, limit_args);
  limit->add_option("--window", limit_window, "Report window W");
  limit->add_option("--max-T", limit_max_T, "Largest horizon to solve");
  limit->add_option("--schedule", limit_schedule,
                    "doubling | linear:<step>");
  limit->add_option("--limit-tol", limit_tol,
                    "Pointwise convergence tolerance");

  auto* tvc = app.add_subcommand(
      "tvc", "Transversality series along a path");
  int tvc_Tmax = 200, tvc_horizon = 0;
  std::string tvc_path;
  bool tvc_diag = false;
  add_common(tvc, tvc_args);
  tvc->add_option("--Tmax", tvc_Tmax, "Largest T in the series");
  tvc->add_option("--path", tvc_path, "Audit this path CSV");
  tvc->add_option("--horizon", tvc_horizon,
                  "Solve horizon when no --path is given (default Tmax)");
  tvc->add_flag("--diagnostics", tvc_diag,
                "Sample concavity/cross-partial assumptions");

  auto* compare = app.add_subcommand(
      "compare", "Compare two paths under an overtaking criterion");
  std::string cmp_a, cmp_b, cmp_criterion = "modified",
                            cmp_schedule = "linear:1";
  int cmp_Tmax = 100;
  add_common(compare, compare_args);
  compare->add_option("--pathA", cmp_a, "Path A CSV")->required();
  compare->add_option("--pathB", cmp_b, "Path B CSV")->required();
  compare->add_option("--criterion", cmp_criterion, "modified | brock")
      ->check(CLI::IsMember({"modified", "brock"}));
  compare->add_option("--Tmax", cmp_Tmax, "Largest T in the D-series");
  compare->add_option("--schedule", cmp_schedule, "doubling | linear:<step>");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_args, solve_T);
    if (limit->parsed())
      return run_limit(limit_args, limit_window, limit_max_T, limit_schedule,
                       limit_tol);
    if (tvc->parsed())
      return run_tvc(tvc_args, tvc_Tmax, tvc_path, tvc_horizon, tvc_diag);
    if (compare->parsed())
      return run_compare(compare_args, cmp_a, cmp_b, cmp_criterion, cmp_Tmax,
                         cmp_schedule);
  } catch (const horizon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
