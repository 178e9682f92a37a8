#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>
#include <utility>

#include "horizon/errors.hpp"

namespace horizon {

// ---------------------------------------------------------------------------
// Windowed tail estimation
// ---------------------------------------------------------------------------

enum class Trend {
  DecreasingToZero,
  Increasing,
  Oscillating,
  Constant,
  Indeterminate,
};

const char* to_string(Trend trend);

/// Windowed estimate of the tail behaviour of a real series. tail_inf and
/// tail_sup are the min/max over the final `window` entries; they bracket
/// every accumulation point the finite sample can witness.
struct TailEstimate {
  Eigen::Index series_length = 0;
  Eigen::Index window = 0;
  double tail_inf = 0.0;
  double tail_sup = 0.0;
  double last_value = 0.0;
  Trend trend = Trend::Indeterminate;
};

/// Estimate liminf/limsup of `series` from its final `window` entries and
/// classify the trend. Throws SizeError if the series is empty or shorter
/// than the window.
TailEstimate tail_estimate(const Eigen::VectorXd& series, Eigen::Index window);

/// Computes tail estimates of `series` and of its negation and checks the
/// duality tail_inf(a) == -tail_sup(-a) exactly. Returns both estimates.
std::pair<TailEstimate, TailEstimate> tail_estimate_duality(
    const Eigen::VectorXd& series, Eigen::Index window);

// ---------------------------------------------------------------------------
// Finite differences
// ---------------------------------------------------------------------------

/// Central difference (f(x+h) - f(x-h)) / (2h) with
/// h = cbrt(machine epsilon) * max(|x|, scale). Evaluation failures at the
/// stencil points propagate as FeasibilityError/DomainError.
double central_diff(const std::function<double(double)>& f, double x,
                    double scale = 1.0);

// ---------------------------------------------------------------------------
// Damped Newton on tridiagonal systems
// ---------------------------------------------------------------------------

struct NewtonOptions {
  double tol = 1e-11;        // residual max-norm target, > 0
  int max_iter = 100;        // >= 1
  double damping = 1.0;      // initial step fraction, in (0, 1]
  double bound_margin = 1e-3;  // iterate clearance as a fraction of the
                               // bound width, in (0, 0.5)
};

enum class NewtonStatus {
  Converged,
  MaxIterations,
  SingularJacobian,
  StepUnderflow,  // 30 halvings without residual decrease
};

struct NewtonResult {
  Eigen::VectorXd x;
  int iterations = 0;
  double residual_max = 0.0;
  NewtonStatus status = NewtonStatus::MaxIterations;
  bool converged() const { return status == NewtonStatus::Converged; }
  std::string message() const;
};

/// Residual F(x) of the same dimension as x.
using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Fills the three Jacobian bands at x: sub(i) = dF_i/dx_{i-1},
/// diag(i) = dF_i/dx_i, super(i) = dF_i/dx_{i+1}. Vectors are presized to n;
/// sub(0) and super(n-1) are ignored.
using TridiagJacobianFn =
    std::function<void(const Eigen::VectorXd&, Eigen::VectorXd& sub,
                       Eigen::VectorXd& diag, Eigen::VectorXd& super)>;

/// Damped Newton iteration for F(x) = 0 with tridiagonal Jacobian. Each step
/// solves the linearisation by the Thomas forward-elimination /
/// back-substitution sweep, then backtracks (halving) until the residual
/// max-norm decreases, clipping iterates to stay bound_margin * width inside
/// (lower, upper) when the bounds are finite. Residual evaluations that throw
/// FeasibilityError or DomainError are treated as rejected trial points.
NewtonResult newton_tridiag(const ResidualFn& residual,
                            const TridiagJacobianFn& jacobian,
                            Eigen::VectorXd x_init, double lower, double upper,
                            const NewtonOptions& opts = {});

}  // namespace horizon
