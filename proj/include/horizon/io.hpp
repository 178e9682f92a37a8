#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "horizon/core.hpp"
#include "horizon/criteria.hpp"
#include "horizon/limit.hpp"
#include "horizon/solver.hpp"
#include "horizon/tvc.hpp"

namespace horizon {

/// Shortest decimal rendering that parses back to the same double.
std::string format_double(double value);

// ---------------------------------------------------------------------------
// Path CSV: header "t,x", rows in ascending t from 0, no gaps or duplicates.
// ---------------------------------------------------------------------------

Path read_path_csv(const std::filesystem::path& file);
std::string path_to_csv(const Path& path);
void write_path_csv(const std::filesystem::path& file, const Path& path);

// ---------------------------------------------------------------------------
// Problem specification files
// ---------------------------------------------------------------------------

/// Parsed problem-spec JSON: {"model", "params", "expr", "feasible_if",
/// "bounds", "x0"}. "custom" requires "expr"; built-ins ignore it.
struct ProblemSpec {
  std::string model;  // growth | counterexample | custom
  std::map<std::string, double> params;
  std::optional<std::string> expr;
  std::optional<std::string> feasible_if;
  std::optional<double> lower, upper;  // open-interval bounds, null = infinite
  std::optional<double> x0;
};

ProblemSpec parse_problem_spec(const nlohmann::json& j);
ProblemSpec read_problem_spec(const std::filesystem::path& file);

/// Wires the full Problem: built-ins through the model registry, "custom"
/// through the expression language. Throws ParameterError/IoError on bad
/// fields.
Problem build_problem(const ProblemSpec& spec);

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

nlohmann::json to_json(const TailEstimate& tail);
nlohmann::json to_json(const SolveReport& report);
nlohmann::json to_json(const LimitReport& report, const GapReport& gap);
nlohmann::json to_json(const TvcSeries& series);
nlohmann::json to_json(const TvcReport& report, int Tmax);
nlohmann::json to_json(const CompareReport& report);
nlohmann::json to_json(const AssumptionDiagnostics& diag);

/// Series CSVs for external plotting.
std::string gap_to_csv(const GapReport& gap);            // T,delta
std::string compare_to_csv(const CompareReport& report); // T,D
std::string tvc_to_csv(const TvcReport& report);         // T,K,E

/// Writes via a temp file in the same directory followed by a rename, so a
/// reader never sees a partial file.
void write_file_atomic(const std::filesystem::path& file,
                       const std::string& contents);

}  // namespace horizon
