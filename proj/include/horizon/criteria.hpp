#pragma once

#include <Eigen/Core>
#include <vector>

#include "horizon/core.hpp"
#include "horizon/numerics.hpp"

namespace horizon {

enum class Criterion { Modified, Brock };
enum class CompareVerdict { BOvertakesA, AOvertakesB, Neither, Indeterminate };

const char* to_string(Criterion criterion);
const char* to_string(CompareVerdict verdict);

struct CompareOptions {
  double threshold = 1e-9;  // band for declaring strict overtaking
  Eigen::Index window = 0;  // tail window; 0 = clamp(len/4, 1, 50)
  bool check_attainability = true;
};

/// Pairwise comparison report: D(T) = partial return of B minus partial
/// return of A over the schedule, the tail estimate of D, and the verdict.
struct CompareReport {
  Criterion criterion = Criterion::Modified;
  std::vector<int> schedule;
  Eigen::VectorXd d_series;
  TailEstimate tail;
  CompareVerdict verdict = CompareVerdict::Indeterminate;
};

/// Modified comparison: both paths pass through the eating-up truncation
/// before summing, D(T) = truncated_sum(B, T) - truncated_sum(A, T).
/// B overtakes A when the tail-inf of D is above the threshold. Throws
/// AttainabilityError when a path fails the attainability check, and
/// FeasibilityError (with path tag and t) on an infeasible term.
CompareReport compare_modified(const Problem& problem, const Path& a,
                               const Path& b, const std::vector<int>& schedule,
                               const CompareOptions& opts = {});

/// Comparison of the raw (untruncated) partial sums,
/// D(T) = sum_{t=0}^{T} [v(B(t), B(t+1), t) - v(A(t), A(t+1), t)]; requires
/// both paths to extend one step past the largest scheduled T.
CompareReport compare_brock(const Problem& problem, const Path& a,
                            const Path& b, const std::vector<int>& schedule,
                            const CompareOptions& opts = {});

}  // namespace horizon
