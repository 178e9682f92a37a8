#pragma once

#include <Eigen/Core>
#include <vector>

#include "horizon/core.hpp"
#include "horizon/numerics.hpp"
#include "horizon/solver.hpp"

namespace horizon {

/// Horizon-limit computation over a window [0, W]: each horizon in the
/// schedule is solved and the limit path is read off the largest one.
struct LimitReport {
  int window = 0;
  Path limit_path;             // x_lim(0..W), from the largest horizon
  std::vector<int> schedule;   // horizons actually solved
  Eigen::VectorXd per_t_convergence;  // |x_{T_k}(t) - x_{T_{k-1}}(t)|, t<=W
  bool converged = false;      // max per-t delta < tol at the last step
  double tol = 0.0;
};

/// Builds a strictly increasing doubling schedule {W, 2W, 4W, ...} capped by
/// max_T (which is always included as the final entry).
std::vector<int> doubling_schedule(int window, int max_T);

/// Linear schedule {step, 2*step, ...} capped by max_T (always included).
std::vector<int> linear_schedule(int step, int max_T);

/// Solves every horizon in `schedule` and reports the pointwise limit over
/// t = 0..window. The schedule must be strictly increasing with last entry
/// >= window. Solve failures propagate as Error with the horizon attached;
/// failure to meet `tol` between the two largest horizons is reported, not
/// thrown.
LimitReport limit_path(const Problem& problem, int window,
                       const std::vector<int>& schedule, double tol = 1e-8,
                       const NewtonOptions& opts = {});

/// Optimality-gap series for the horizon-limit candidate:
///   delta(T) = truncated_sum(x_T, T) - truncated_sum(x_lim, T)
/// with x_T re-solved at each horizon in the schedule. The candidate path
/// must cover [0, max schedule].
struct GapReport {
  std::vector<int> schedule;
  Eigen::VectorXd delta;
  TailEstimate tail;
};

GapReport theorem1_gap(const Problem& problem, const Path& limit_path,
                       const std::vector<int>& schedule,
                       const NewtonOptions& opts = {});

/// The agreeable-plans condition evaluates the same sums term for term;
/// emitted under its own name for traceability.
GapReport agreeable_gap(const Problem& problem, const Path& limit_path,
                        const std::vector<int>& schedule,
                        const NewtonOptions& opts = {});

}  // namespace horizon
