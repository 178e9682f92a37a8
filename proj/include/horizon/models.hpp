#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <string>

#include "horizon/core.hpp"

namespace horizon {

// ---------------------------------------------------------------------------
// One-sector growth model
//
// v(x, y, t) = beta^t * ln(x^alpha - y), feasible when y < x^alpha, state
// bounds (0, 1). Log utility over consumption c(t) = k(t)^alpha - k(t+1)
// with Cobb-Douglas production f(k) = k^alpha; the discount factor is
// carried inside v.
// ---------------------------------------------------------------------------

struct GrowthParams {
  double alpha = 0.5;  // in (0, 1)
  double beta = 0.9;   // in (0, 1]
  double k0 = 0.25;    // in (0, 1)

  void validate() const;  // throws ParameterError
  /// Fixed point of the limit policy: (alpha*beta)^(1/(1-alpha)).
  double steady_state() const;
};

Problem growth_problem(const GrowthParams& params);

struct FiniteGrowthSolution {
  Path capital;                // k(0..T); k(T+1) = 0 by construction
  Eigen::VectorXd consumption;  // c(0..T), c(t) = k(t)^alpha - k(t+1)
};

/// Unique optimum of the horizon-T truncated growth problem, generated by the
/// savings-policy recursion
///   k(t+1) = alpha*beta * (1-(alpha*beta)^(T-t)) / (1-(alpha*beta)^(T-t+1))
///            * k(t)^alpha.
FiniteGrowthSolution growth_finite_closed_form(const GrowthParams& params,
                                               int T);

struct LimitGrowthSolution {
  Path capital;                 // k_inf(0..window)
  Eigen::VectorXd consumption;  // c_inf(0..window) = (1-alpha*beta)*k^alpha
  Eigen::VectorXd shadow_price;  // lambda_inf(0..window) = 1/c_inf
};

/// Horizon limit of the finite solutions:
///   k_inf(t) = s * (k0/s)^(alpha^t) with s = (alpha*beta)^(1/(1-alpha)),
/// equivalently the limit policy k(t+1) = alpha*beta*k(t)^alpha.
LimitGrowthSolution growth_limit_closed_form(const GrowthParams& params,
                                             int window);

// ---------------------------------------------------------------------------
// Quadratic-linear model
//
// v(x, y, t) = -(x - a)^2 - b*(y - x), feasible everywhere, unbounded state.
// Euler stationarity pins x(t) = a for all t >= 1 regardless of horizon.
// ---------------------------------------------------------------------------

struct CounterexampleParams {
  double a = 2.0;  // >= 0
  double b = 3.0;  // > 0
  std::optional<double> x0;  // defaults to a

  double start() const { return x0.value_or(a); }
  void validate() const;  // throws ParameterError
};

Problem counterexample_problem(const CounterexampleParams& params);

/// The optimal path x(0..T), identically a. Throws ParameterError when asked
/// to start anywhere other than x0 = a.
Path counterexample_solution(const CounterexampleParams& params, int T);

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// Builds a fully wired Problem from a model name and a parameter map.
/// Known names: "growth" (alpha, beta, k0), "counterexample" (a, b).
/// Throws ParameterError for unknown names or out-of-range values.
Problem model_registry(const std::string& name,
                       const std::map<std::string, double>& params);

}  // namespace horizon
