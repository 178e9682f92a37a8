#include "horizon/criteria.hpp"

#include <algorithm>
#include <string>

namespace horizon {

const char* to_string(Criterion criterion) {
  return criterion == Criterion::Modified ? "modified" : "brock";
}

const char* to_string(CompareVerdict verdict) {
  switch (verdict) {
    case CompareVerdict::BOvertakesA: return "b_overtakes_a";
    case CompareVerdict::AOvertakesB: return "a_overtakes_b";
    case CompareVerdict::Neither: return "neither";
    case CompareVerdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

void check_inputs(const Problem& problem, const Path& a, const Path& b,
                  const std::vector<int>& schedule, int required_horizon,
                  const CompareOptions& opts) {
  if (schedule.empty()) throw SizeError("compare: schedule is empty");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1])
      throw SizeError("compare: schedule must be strictly increasing");
  }
  if (schedule.front() < 0)
    throw SizeError("compare: schedule entries must be >= 0");
  if (a.horizon() < required_horizon || b.horizon() < required_horizon)
    throw SizeError("compare: paths must cover t = 0.." +
                    std::to_string(required_horizon));
  if (opts.check_attainability) {
    if (auto v = is_attainable(problem, a); !v)
      throw AttainabilityError("compare: path A unattainable at index " +
                                   std::to_string(v.first_violation),
                               v.first_violation);
    if (auto v = is_attainable(problem, b); !v)
      throw AttainabilityError("compare: path B unattainable at index " +
                                   std::to_string(v.first_violation),
                               v.first_violation);
  }
}

double raw_term(const Problem& problem, const Path& path, int t,
                const char* tag) {
  try {
    return problem.v.value(path[t], path[t + 1], t);
  } catch (const FeasibilityError& e) {
    throw FeasibilityError(std::string("path ") + tag + ": " + e.what(), t);
  }
}

double boundary_term(const Problem& problem, const Path& path, int T,
                     const char* tag) {
  try {
    return problem.v.value(path[T], 0.0, T);
  } catch (const FeasibilityError& e) {
    throw FeasibilityError(std::string("path ") + tag + ": " + e.what(), T);
  }
}

CompareVerdict classify(const TailEstimate& tail, double threshold) {
  if (tail.tail_inf > threshold) return CompareVerdict::BOvertakesA;
  if (tail.tail_sup < -threshold) return CompareVerdict::AOvertakesB;
  if (std::abs(tail.tail_inf) <= threshold &&
      (tail.trend == Trend::Constant ||
       tail.trend == Trend::DecreasingToZero))
    return CompareVerdict::Neither;
  return CompareVerdict::Indeterminate;
}

CompareReport compare(const Problem& problem, const Path& a, const Path& b,
                      const std::vector<int>& schedule, Criterion criterion,
                      const CompareOptions& opts) {
  const int max_T = schedule.back();
  const int required =
      criterion == Criterion::Brock ? max_T + 1 : max_T;
  check_inputs(problem, a, b, schedule, required, opts);

  CompareReport report;
  report.criterion = criterion;
  report.schedule = schedule;
  report.d_series.resize(static_cast<Eigen::Index>(schedule.size()));

  // Running prefix of the raw per-period differences; the modified sums
  // swap the final raw term for the eating-up boundary term. Accumulation
  // order matches truncated_sum exactly.
  double prefix_a = 0.0, prefix_b = 0.0;
  int next_t = 0;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const int T = schedule[i];
    for (; next_t < T; ++next_t) {
      prefix_a += raw_term(problem, a, next_t, "A");
      prefix_b += raw_term(problem, b, next_t, "B");
    }
    double sum_a, sum_b;
    if (criterion == Criterion::Brock) {
      sum_a = prefix_a + raw_term(problem, a, T, "A");
      sum_b = prefix_b + raw_term(problem, b, T, "B");
    } else {
      sum_a = prefix_a + boundary_term(problem, a, T, "A");
      sum_b = prefix_b + boundary_term(problem, b, T, "B");
    }
    report.d_series[static_cast<Eigen::Index>(i)] = sum_b - sum_a;
  }

  const Eigen::Index window =
      opts.window > 0
          ? opts.window
          : std::clamp<Eigen::Index>(report.d_series.size() / 4, 1, 50);
  report.tail = tail_estimate(report.d_series, window);
  report.verdict = classify(report.tail, opts.threshold);
  return report;
}

}  // namespace

CompareReport compare_modified(const Problem& problem, const Path& a,
                               const Path& b,
                               const std::vector<int>& schedule,
                               const CompareOptions& opts) {
  return compare(problem, a, b, schedule, Criterion::Modified, opts);
}

CompareReport compare_brock(const Problem& problem, const Path& a,
                            const Path& b, const std::vector<int>& schedule,
                            const CompareOptions& opts) {
  return compare(problem, a, b, schedule, Criterion::Brock, opts);
}

}  // namespace horizon
