#include "horizon/solver.hpp"

#include <cmath>

namespace horizon {

EulerResiduals euler_residual(const Problem& problem,
                              const Path& path_with_boundary) {
  const Path& x = path_with_boundary;
  if (x.size() < 3)
    throw SizeError("euler_residual: need at least three path values");
  const int n = x.horizon();

  EulerResiduals out;
  out.residuals.resize(n - 1);
  for (int t = 0; t + 2 <= n; ++t) {
    problem.v.require_feasible(x[t], x[t + 1], t);
    problem.v.require_feasible(x[t + 1], x[t + 2], t + 1);
    out.residuals[t] = problem.v.d2(x[t], x[t + 1], t) +
                       problem.v.d1(x[t + 1], x[t + 2], t + 1);
  }
  out.max_norm = out.residuals.cwiseAbs().maxCoeff();
  return out;
}

namespace {

// Full state sequence x(0..T+1) from the interior unknowns.
Eigen::VectorXd assemble(double x0, const Eigen::VectorXd& interior) {
  Eigen::VectorXd x(interior.size() + 2);
  x[0] = x0;
  x.segment(1, interior.size()) = interior;
  x[x.size() - 1] = 0.0;
  return x;
}

Eigen::VectorXd initial_guess(const Problem& problem, int T,
                              InitialGuess policy,
                              const NewtonOptions& opts) {
  Eigen::VectorXd u(T);
  if (!problem.has_finite_bounds()) {
    u.setConstant(problem.x0);
    return u;
  }
  const double width = problem.upper - problem.lower;
  if (policy == InitialGuess::Geometric) {
    const double mid = problem.lower + 0.5 * width;
    if (problem.x0 > 0.0 && mid > 0.0) {
      // Approach the midpoint without reaching it, so barrier-like domains
      // y < f(x) stay strictly satisfied along the ramp.
      const double ratio = mid / problem.x0;
      for (int t = 1; t <= T; ++t)
        u[t - 1] = problem.x0 *
                   std::pow(ratio, static_cast<double>(t) / (T + 1));
      return u;
    }
  }
  const double target =
      std::max(problem.lower, 0.0) + opts.bound_margin * width;
  for (int t = 1; t <= T; ++t)
    u[t - 1] = problem.x0 +
               (target - problem.x0) * static_cast<double>(t) / T;
  return u;
}

}  // namespace

SolveReport solve_finite(const Problem& problem, int T,
                         const NewtonOptions& opts, InitialGuess guess) {
  if (T < 0) throw SizeError("solve_finite: T must be >= 0");

  SolveReport report;
  report.horizon = T;

  if (T == 0) {
    report.path = Path(Eigen::VectorXd::Constant(1, problem.x0));
    report.converged = true;
    report.message = "trivial horizon: no interior unknowns";
    report.objective = problem.v.value(problem.x0, 0.0, 0);
    return report;
  }

  const ReturnFunction& v = problem.v;
  const double x0 = problem.x0;

  auto residual = [&](const Eigen::VectorXd& interior) {
    const Eigen::VectorXd x = assemble(x0, interior);
    Eigen::VectorXd f(T);
    for (int s = 1; s <= T; ++s) {
      v.require_feasible(x[s - 1], x[s], s - 1);
      v.require_feasible(x[s], x[s + 1], s);
      f[s - 1] = v.d2(x[s - 1], x[s], s - 1) + v.d1(x[s], x[s + 1], s);
    }
    return f;
  };
  auto jacobian = [&](const Eigen::VectorXd& interior, Eigen::VectorXd& sub,
                      Eigen::VectorXd& diag, Eigen::VectorXd& super) {
    const Eigen::VectorXd x = assemble(x0, interior);
    for (int s = 1; s <= T; ++s) {
      sub[s - 1] = v.d21(x[s - 1], x[s], s - 1);
      diag[s - 1] = v.d22(x[s - 1], x[s], s - 1) + v.d11(x[s], x[s + 1], s);
      super[s - 1] = v.d12(x[s], x[s + 1], s);
    }
  };

  NewtonResult result;
  try {
    result = newton_tridiag(residual, jacobian,
                            initial_guess(problem, T, guess, opts),
                            problem.lower, problem.upper, opts);
  } catch (const FeasibilityError&) {
    if (guess == InitialGuess::Geometric) {
      // The geometric ramp left the domain; retry with the linear one.
      result = newton_tridiag(
          residual, jacobian,
          initial_guess(problem, T, InitialGuess::Linear, opts),
          problem.lower, problem.upper, opts);
    } else {
      throw;
    }
  }

  Eigen::VectorXd x = assemble(x0, result.x);
  report.path = Path(x.head(T + 1));
  report.iterations = result.iterations;
  report.converged = result.converged();
  report.message = result.message();
  report.euler_residual_max =
      euler_residual(problem, Path(std::move(x))).max_norm;
  report.objective = truncated_sum(problem, report.path, T);
  return report;
}

}  // namespace horizon
