#pragma once

#include <Eigen/Core>
#include <string>

#include "horizon/core.hpp"
#include "horizon/numerics.hpp"

namespace horizon {

/// Initial-guess policy for the Euler system unknowns x(1..T).
enum class InitialGuess {
  Geometric,  // x0 interpolated geometrically toward the bound midpoint
  Linear,     // x0 interpolated linearly toward just above max(lower, 0)
};

/// Finite-horizon solve outcome. `path` holds x(0..T); the eating-up
/// boundary x(T+1) = 0 is implicit. `objective` is the truncated partial
/// return at T.
struct SolveReport {
  Path path;
  int horizon = 0;
  double euler_residual_max = 0.0;
  int iterations = 0;
  bool converged = false;
  double objective = 0.0;
  std::string message;
};

/// Maximizes sum_{t=0}^{T} v(x(t), x(t+1), t) with x(0) = x0 and
/// x(T+1) = 0 by solving the interior Euler system
///   v2(x(s-1), x(s), s-1) + v1(x(s), x(s+1), s) = 0,  s = 1..T,
/// with a damped Newton iteration on its tridiagonal Jacobian. T = 0 has no
/// unknowns: the report carries path (x0) and objective v(x0, 0, 0).
SolveReport solve_finite(const Problem& problem, int T,
                         const NewtonOptions& opts = {},
                         InitialGuess guess = InitialGuess::Geometric);

struct EulerResiduals {
  Eigen::VectorXd residuals;  // residual(t), t = 0..N-2
  double max_norm = 0.0;
};

/// Euler residuals along a path that records its terminal successor:
/// residual(t) = v2(x(t), x(t+1), t) + v1(x(t+1), x(t+2), t+1). Requires at
/// least three sampled values. Throws FeasibilityError (with the index) on
/// an infeasible transition.
EulerResiduals euler_residual(const Problem& problem,
                              const Path& path_with_boundary);

}  // namespace horizon
