#include "horizon/limit.hpp"

#include <algorithm>

namespace horizon {

std::vector<int> doubling_schedule(int window, int max_T) {
  if (window < 1) throw SizeError("doubling_schedule: window must be >= 1");
  if (max_T < window)
    throw SizeError("doubling_schedule: max_T below window");
  std::vector<int> schedule;
  for (long long T = window; T < max_T; T *= 2)
    schedule.push_back(static_cast<int>(T));
  schedule.push_back(max_T);
  return schedule;
}

std::vector<int> linear_schedule(int step, int max_T) {
  if (step < 1) throw SizeError("linear_schedule: step must be >= 1");
  if (max_T < step) throw SizeError("linear_schedule: max_T below step");
  std::vector<int> schedule;
  for (int T = step; T < max_T; T += step) schedule.push_back(T);
  schedule.push_back(max_T);
  return schedule;
}

namespace {

void check_schedule(const std::vector<int>& schedule) {
  if (schedule.empty()) throw SizeError("schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1)
      throw SizeError("schedule entries must be >= 1");
    if (i > 0 && schedule[i] <= schedule[i - 1])
      throw SizeError("schedule must be strictly increasing");
  }
}

SolveReport solve_horizon(const Problem& problem, int T,
                          const NewtonOptions& opts) {
  SolveReport report = solve_finite(problem, T, opts);
  if (!report.converged)
    throw Error("horizon " + std::to_string(T) +
                " failed to solve: " + report.message);
  return report;
}

}  // namespace

LimitReport limit_path(const Problem& problem, int window,
                       const std::vector<int>& schedule, double tol,
                       const NewtonOptions& opts) {
  if (window < 0) throw SizeError("limit_path: window must be >= 0");
  check_schedule(schedule);
  if (schedule.back() < window)
    throw SizeError("limit_path: largest horizon " +
                    std::to_string(schedule.back()) + " is below the window " +
                    std::to_string(window));

  LimitReport report;
  report.window = window;
  report.schedule = schedule;
  report.tol = tol;
  report.per_t_convergence = Eigen::VectorXd::Zero(window + 1);

  Eigen::VectorXd previous;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const SolveReport solved = solve_horizon(problem, schedule[i], opts);
    // Early schedule entries may be shorter than the window; compare over
    // the common prefix.
    const Eigen::Index n =
        std::min<Eigen::Index>(window + 1, solved.path.size());
    Eigen::VectorXd head = solved.path.values().head(n);
    if (i > 0) {
      const Eigen::Index m = std::min(head.size(), previous.size());
      report.per_t_convergence.setZero();
      report.per_t_convergence.head(m) =
          (head.head(m) - previous.head(m)).cwiseAbs();
    }
    previous = std::move(head);
    if (i + 1 == schedule.size()) report.limit_path = Path(previous);
  }
  report.converged = schedule.size() == 1 ||
                     report.per_t_convergence.maxCoeff() < tol;
  return report;
}

GapReport theorem1_gap(const Problem& problem, const Path& limit_path,
                       const std::vector<int>& schedule,
                       const NewtonOptions& opts) {
  check_schedule(schedule);
  if (limit_path.horizon() < schedule.back())
    throw SizeError("theorem1_gap: candidate path horizon " +
                    std::to_string(limit_path.horizon()) +
                    " is shorter than the largest scheduled T " +
                    std::to_string(schedule.back()));

  GapReport report;
  report.schedule = schedule;
  report.delta.resize(static_cast<Eigen::Index>(schedule.size()));
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const int T = schedule[i];
    const SolveReport solved = solve_horizon(problem, T, opts);
    report.delta[static_cast<Eigen::Index>(i)] =
        solved.objective - truncated_sum(problem, limit_path, T);
  }
  const Eigen::Index window =
      std::clamp<Eigen::Index>(report.delta.size() / 4, 1, 50);
  report.tail = tail_estimate(report.delta, window);
  return report;
}

GapReport agreeable_gap(const Problem& problem, const Path& limit_path,
                        const std::vector<int>& schedule,
                        const NewtonOptions& opts) {
  // Identical sums term for term in the scalar setting.
  return theorem1_gap(problem, limit_path, schedule, opts);
}

}  // namespace horizon
