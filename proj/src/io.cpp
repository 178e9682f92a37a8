#include "horizon/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "horizon/expr.hpp"
#include "horizon/models.hpp"

namespace horizon {

std::string format_double(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

double parse_strict_double(const std::string& text, int line_no) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw IoError("path csv line " + std::to_string(line_no) +
                  ": malformed number '" + text + "'");
  return value;
}

}  // namespace

Path read_path_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());

  std::string line;
  if (!std::getline(in, line)) throw IoError(file.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,x")
    throw IoError(file.string() + ": expected header 't,x', got '" + line +
                  "'");

  std::vector<double> values;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw IoError(file.string() + " line " + std::to_string(line_no) +
                    ": expected 't,x' row");
    const std::string t_text = line.substr(0, comma);
    long t = 0;
    auto [t_end, t_ec] =
        std::from_chars(t_text.data(), t_text.data() + t_text.size(), t);
    if (t_ec != std::errc() || t_end != t_text.data() + t_text.size())
      throw IoError(file.string() + " line " + std::to_string(line_no) +
                    ": malformed time index '" + t_text + "'");
    const long expected = static_cast<long>(values.size());
    if (t != expected)
      throw IoError(file.string() + " line " + std::to_string(line_no) +
                    ": expected t = " + std::to_string(expected) + ", got " +
                    std::to_string(t) + (t < expected ? " (duplicate)"
                                                      : " (gap)"));
    values.push_back(parse_strict_double(line.substr(comma + 1), line_no));
  }
  if (values.empty()) throw IoError(file.string() + ": no path rows");

  Eigen::VectorXd v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = values[i];
  return Path(std::move(v));
}

std::string path_to_csv(const Path& path) {
  std::string out = "t,x\n";
  for (int t = 0; t <= path.horizon(); ++t) {
    out += std::to_string(t);
    out += ',';
    out += format_double(path[t]);
    out += '\n';
  }
  return out;
}

void write_path_csv(const std::filesystem::path& file, const Path& path) {
  write_file_atomic(file, path_to_csv(path));
}

ProblemSpec parse_problem_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw IoError("problem spec: expected a JSON object");
  ProblemSpec spec;
  if (!j.contains("model") || !j["model"].is_string())
    throw IoError("problem spec: missing string field 'model'");
  spec.model = j["model"].get<std::string>();

  if (j.contains("params")) {
    if (!j["params"].is_object())
      throw IoError("problem spec: 'params' must be an object");
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
      if (!it.value().is_number())
        throw IoError("problem spec: parameter '" + it.key() +
                      "' must be a number");
      spec.params[it.key()] = it.value().get<double>();
    }
  }
  if (j.contains("expr")) spec.expr = j["expr"].get<std::string>();
  if (j.contains("feasible_if"))
    spec.feasible_if = j["feasible_if"].get<std::string>();
  if (j.contains("x0")) spec.x0 = j["x0"].get<double>();
  if (j.contains("bounds")) {
    const auto& b = j["bounds"];
    if (!b.is_array() || b.size() != 2)
      throw IoError("problem spec: 'bounds' must be [lower, upper]");
    if (!b[0].is_null()) spec.lower = b[0].get<double>();
    if (!b[1].is_null()) spec.upper = b[1].get<double>();
  }
  return spec;
}

ProblemSpec read_problem_spec(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(file.string() + ": " + e.what());
  }
  return parse_problem_spec(j);
}

Problem build_problem(const ProblemSpec& spec) {
  if (spec.model == "growth" || spec.model == "counterexample") {
    Problem p = model_registry(spec.model, spec.params);
    if (spec.x0) p.x0 = *spec.x0;
    if (spec.lower) p.lower = *spec.lower;
    if (spec.upper) p.upper = *spec.upper;
    if (!(p.lower < p.x0 && p.x0 < p.upper))
      throw ParameterError("problem spec: x0 must lie strictly inside bounds");
    return p;
  }
  if (spec.model == "custom") {
    if (!spec.expr)
      throw ParameterError("problem spec: model 'custom' requires 'expr'");
    if (!spec.x0)
      throw ParameterError("problem spec: model 'custom' requires 'x0'");
    std::optional<expr::Condition> domain;
    if (spec.feasible_if) domain = expr::parse_condition(*spec.feasible_if);

    Problem p;
    p.v = expr::make_return_function(expr::parse(*spec.expr), spec.params,
                                     std::move(domain));
    p.x0 = *spec.x0;
    if (spec.lower) p.lower = *spec.lower;
    if (spec.upper) p.upper = *spec.upper;
    p.name = "custom";
    if (!(p.lower < p.x0 && p.x0 < p.upper))
      throw ParameterError("problem spec: x0 must lie strictly inside bounds");
    return p;
  }
  throw ParameterError("problem spec: unknown model '" + spec.model + "'");
}

nlohmann::json to_json(const TailEstimate& tail) {
  return {{"series_length", tail.series_length},
          {"window", tail.window},
          {"tail_inf", tail.tail_inf},
          {"tail_sup", tail.tail_sup},
          {"last_value", tail.last_value},
          {"trend", to_string(tail.trend)}};
}

nlohmann::json to_json(const SolveReport& report) {
  nlohmann::json path = nlohmann::json::array();
  for (int t = 0; t <= report.path.horizon(); ++t)
    path.push_back({{"t", t}, {"x", report.path[t]}});
  return {{"horizon", report.horizon},
          {"converged", report.converged},
          {"iterations", report.iterations},
          {"euler_residual_max", report.euler_residual_max},
          {"objective", report.objective},
          {"message", report.message},
          {"path", std::move(path)}};
}

nlohmann::json to_json(const LimitReport& report, const GapReport& gap) {
  nlohmann::json path = nlohmann::json::array();
  for (int t = 0; t <= report.limit_path.horizon(); ++t)
    path.push_back({{"t", t}, {"x", report.limit_path[t]}});
  nlohmann::json per_t = nlohmann::json::array();
  for (Eigen::Index i = 0; i < report.per_t_convergence.size(); ++i)
    per_t.push_back(report.per_t_convergence[i]);

  nlohmann::json gap_json = {{"schedule", gap.schedule},
                             {"delta", nlohmann::json::array()},
                             {"tail", to_json(gap.tail)},
                             {"verdict", to_string(gap.tail.trend)}};
  for (Eigen::Index i = 0; i < gap.delta.size(); ++i)
    gap_json["delta"].push_back(gap.delta[i]);

  return {{"window", report.window},
          {"schedule", report.schedule},
          {"converged", report.converged},
          {"tol", report.tol},
          {"limit_path", std::move(path)},
          {"per_t_convergence", std::move(per_t)},
          {"gap", std::move(gap_json)}};
}

nlohmann::json to_json(const TvcSeries& series) {
  nlohmann::json values = nlohmann::json::array();
  for (Eigen::Index i = 0; i < series.series.size(); ++i)
    values.push_back(series.series[i]);
  return {{"first_T", series.first_T},
          {"series", std::move(values)},
          {"tail", to_json(series.tail)},
          {"verdict", to_string(series.verdict)}};
}

nlohmann::json to_json(const TvcReport& report, int Tmax) {
  return {{"Tmax", Tmax},
          {"kamihigashi", to_json(report.kamihigashi)},
          {"eating_up", to_json(report.eating_up)}};
}

nlohmann::json to_json(const CompareReport& report) {
  nlohmann::json d = nlohmann::json::array();
  for (Eigen::Index i = 0; i < report.d_series.size(); ++i)
    d.push_back(report.d_series[i]);
  return {{"criterion", to_string(report.criterion)},
          {"schedule", report.schedule},
          {"d_series", std::move(d)},
          {"tail", to_json(report.tail)},
          {"verdict", to_string(report.verdict)}};
}

nlohmann::json to_json(const AssumptionDiagnostics& diag) {
  return {{"samples", diag.samples},
          {"concavity_violations", diag.concavity_violations},
          {"cross_partial_sign_violations",
           diag.cross_partial_sign_violations},
          {"continuity_probe", diag.continuity_probe}};
}

std::string gap_to_csv(const GapReport& gap) {
  std::string out = "T,delta\n";
  for (std::size_t i = 0; i < gap.schedule.size(); ++i) {
    out += std::to_string(gap.schedule[i]);
    out += ',';
    out += format_double(gap.delta[static_cast<Eigen::Index>(i)]);
    out += '\n';
  }
  return out;
}

std::string compare_to_csv(const CompareReport& report) {
  std::string out = "T,D\n";
  for (std::size_t i = 0; i < report.schedule.size(); ++i) {
    out += std::to_string(report.schedule[i]);
    out += ',';
    out += format_double(report.d_series[static_cast<Eigen::Index>(i)]);
    out += '\n';
  }
  return out;
}

std::string tvc_to_csv(const TvcReport& report) {
  // K runs from T = 0, E from T = 1; rows span the union with blanks where
  // a series has no value.
  const int k_first = report.kamihigashi.first_T;
  const int e_first = report.eating_up.first_T;
  const int k_last = k_first + static_cast<int>(
                                   report.kamihigashi.series.size()) - 1;
  const int e_last = e_first + static_cast<int>(
                                   report.eating_up.series.size()) - 1;
  std::string out = "T,K,E\n";
  for (int T = std::min(k_first, e_first); T <= std::max(k_last, e_last);
       ++T) {
    out += std::to_string(T);
    out += ',';
    if (T >= k_first && T <= k_last)
      out += format_double(report.kamihigashi.series[T - k_first]);
    out += ',';
    if (T >= e_first && T <= e_last)
      out += format_double(report.eating_up.series[T - e_first]);
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& file,
                       const std::string& contents) {
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << contents;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace horizon
