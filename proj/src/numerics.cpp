#include "horizon/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace horizon {

const char* to_string(Trend trend) {
  switch (trend) {
    case Trend::DecreasingToZero: return "decreasing_to_zero";
    case Trend::Increasing: return "increasing";
    case Trend::Oscillating: return "oscillating";
    case Trend::Constant: return "constant";
    case Trend::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

Trend classify_trend(const Eigen::VectorXd& series, Eigen::Index window,
                     double tail_inf, double tail_sup) {
  const Eigen::Index n = series.size();
  const auto tail = series.tail(window);
  const double last = series[n - 1];

  if (tail_sup - tail_inf < 1e-12 * (1.0 + std::abs(last)))
    return Trend::Constant;

  Eigen::Index sign_changes = 0;
  for (Eigen::Index i = 1; i < window; ++i) {
    if ((tail[i - 1] > 0 && tail[i] < 0) || (tail[i - 1] < 0 && tail[i] > 0))
      ++sign_changes;
  }
  if (4 * sign_changes >= window) return Trend::Oscillating;

  bool abs_nonincreasing = true;
  for (Eigen::Index i = 1; i < window; ++i) {
    if (std::abs(tail[i]) > std::abs(tail[i - 1])) {
      abs_nonincreasing = false;
      break;
    }
  }
  // Zero band relative to where the series started, so a long decay that has
  // shed three orders of magnitude still counts as heading to zero.
  if (abs_nonincreasing && std::abs(last) < 1e-3 * (std::abs(series[0]) + 1.0))
    return Trend::DecreasingToZero;

  // Least-squares slope over the window decides the rest.
  const double tbar = (window - 1) / 2.0;
  const double mean = tail.mean();
  double num = 0.0, den = 0.0;
  for (Eigen::Index i = 0; i < window; ++i) {
    num += (i - tbar) * (tail[i] - mean);
    den += (i - tbar) * (i - tbar);
  }
  const double slope = den > 0 ? num / den : 0.0;
  if (slope > 0) return Trend::Increasing;
  return Trend::Indeterminate;
}

}  // namespace

TailEstimate tail_estimate(const Eigen::VectorXd& series, Eigen::Index window) {
  if (series.size() == 0) throw SizeError("tail_estimate: empty series");
  if (window < 1) throw SizeError("tail_estimate: window must be >= 1");
  if (window > series.size())
    throw SizeError("tail_estimate: window " + std::to_string(window) +
                    " exceeds series length " + std::to_string(series.size()));

  TailEstimate est;
  est.series_length = series.size();
  est.window = window;
  est.tail_inf = series.tail(window).minCoeff();
  est.tail_sup = series.tail(window).maxCoeff();
  est.last_value = series[series.size() - 1];
  est.trend = classify_trend(series, window, est.tail_inf, est.tail_sup);
  return est;
}

std::pair<TailEstimate, TailEstimate> tail_estimate_duality(
    const Eigen::VectorXd& series, Eigen::Index window) {
  TailEstimate a = tail_estimate(series, window);
  TailEstimate b = tail_estimate(-series, window);
  if (a.tail_inf != -b.tail_sup || a.tail_sup != -b.tail_inf)
    throw Error("tail_estimate_duality: liminf(a) != -limsup(-a)");
  return {a, b};
}

double central_diff(const std::function<double(double)>& f, double x,
                    double scale) {
  const double h = std::cbrt(std::numeric_limits<double>::epsilon()) *
                   std::max(std::abs(x), scale);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

std::string NewtonResult::message() const {
  switch (status) {
    case NewtonStatus::Converged:
      return "converged";
    case NewtonStatus::MaxIterations:
      return "no convergence: max iterations reached, residual " +
             std::to_string(residual_max);
    case NewtonStatus::SingularJacobian:
      return "singular tridiagonal pivot";
    case NewtonStatus::StepUnderflow:
      return "no convergence: step underflow, residual " +
             std::to_string(residual_max);
  }
  return "unknown";
}

namespace {

// Thomas sweep for T dx = r. Returns false on a vanishing pivot.
bool solve_tridiag(const Eigen::VectorXd& sub, const Eigen::VectorXd& diag,
                   const Eigen::VectorXd& super, Eigen::VectorXd rhs,
                   Eigen::VectorXd& out) {
  const Eigen::Index n = diag.size();
  Eigen::VectorXd c(n);  // modified superdiagonal
  double pivot = diag[0];
  if (pivot == 0.0 || !std::isfinite(pivot)) return false;
  c[0] = n > 1 ? super[0] / pivot : 0.0;
  rhs[0] /= pivot;
  for (Eigen::Index i = 1; i < n; ++i) {
    pivot = diag[i] - sub[i] * c[i - 1];
    if (pivot == 0.0 || !std::isfinite(pivot)) return false;
    c[i] = i + 1 < n ? super[i] / pivot : 0.0;
    rhs[i] = (rhs[i] - sub[i] * rhs[i - 1]) / pivot;
  }
  out.resize(n);
  out[n - 1] = rhs[n - 1];
  for (Eigen::Index i = n - 2; i >= 0; --i)
    out[i] = rhs[i] - c[i] * out[i + 1];
  return true;
}

bool try_residual(const ResidualFn& residual, const Eigen::VectorXd& x,
                  Eigen::VectorXd& out, double& max_norm) {
  try {
    out = residual(x);
  } catch (const FeasibilityError&) {
    return false;
  } catch (const DomainError&) {
    return false;
  }
  if (!out.allFinite()) return false;
  max_norm = out.size() > 0 ? out.cwiseAbs().maxCoeff() : 0.0;
  return true;
}

}  // namespace

NewtonResult newton_tridiag(const ResidualFn& residual,
                            const TridiagJacobianFn& jacobian,
                            Eigen::VectorXd x_init, double lower, double upper,
                            const NewtonOptions& opts) {
  if (opts.tol <= 0) throw Error("newton_tridiag: tol must be > 0");
  if (opts.max_iter < 1) throw Error("newton_tridiag: max_iter must be >= 1");

  const Eigen::Index n = x_init.size();
  NewtonResult res;
  res.x = std::move(x_init);
  if (n == 0) {
    res.status = NewtonStatus::Converged;
    return res;
  }

  const bool bounded = std::isfinite(lower) && std::isfinite(upper);
  const double clearance = bounded ? opts.bound_margin * (upper - lower) : 0.0;
  auto clip = [&](Eigen::VectorXd& x) {
    if (!bounded) return;
    x = x.cwiseMax(lower + clearance).cwiseMin(upper - clearance);
  };
  clip(res.x);

  Eigen::VectorXd f;
  if (!try_residual(residual, res.x, f, res.residual_max))
    throw FeasibilityError("newton_tridiag: initial point infeasible");

  Eigen::VectorXd sub(n), diag(n), super(n), dx, trial, f_trial;
  for (res.iterations = 0; res.iterations < opts.max_iter; ++res.iterations) {
    if (res.residual_max <= opts.tol) {
      res.status = NewtonStatus::Converged;
      return res;
    }

    jacobian(res.x, sub, diag, super);
    if (!solve_tridiag(sub, diag, super, -f, dx)) {
      res.status = NewtonStatus::SingularJacobian;
      return res;
    }

    // Backtrack: halve until the residual max-norm drops.
    double step = opts.damping;
    bool accepted = false;
    for (int halving = 0; halving < 30; ++halving, step *= 0.5) {
      trial = res.x + step * dx;
      clip(trial);
      double trial_max;
      if (!try_residual(residual, trial, f_trial, trial_max)) continue;
      if (trial_max < res.residual_max) {
        res.x = trial;
        f = f_trial;
        res.residual_max = trial_max;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      res.status = NewtonStatus::StepUnderflow;
      return res;
    }
  }
  if (res.residual_max <= opts.tol) {
    res.status = NewtonStatus::Converged;
  } else {
    res.status = NewtonStatus::MaxIterations;
  }
  return res;
}

}  // namespace horizon
