#include "horizon/models.hpp"

#include <cmath>

namespace horizon {

void GrowthParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ParameterError("growth: alpha must lie in (0, 1), got " +
                         std::to_string(alpha));
  if (!(beta > 0.0 && beta <= 1.0))
    throw ParameterError("growth: beta must lie in (0, 1], got " +
                         std::to_string(beta));
  if (!(k0 > 0.0 && k0 < 1.0))
    throw ParameterError("growth: k0 must lie in (0, 1), got " +
                         std::to_string(k0));
}

double GrowthParams::steady_state() const {
  return std::pow(alpha * beta, 1.0 / (1.0 - alpha));
}

Problem growth_problem(const GrowthParams& params) {
  params.validate();
  const double alpha = params.alpha;
  const double beta = params.beta;

  auto consumption = [alpha](double x, double y) {
    return std::pow(x, alpha) - y;
  };

  ReturnFunction rf;
  rf.feasible = [alpha](double x, double y, int) {
    return x > 0.0 && std::pow(x, alpha) - y > 0.0;
  };
  rf.eval = [=](double x, double y, int t) {
    return std::pow(beta, t) * std::log(consumption(x, y));
  };
  rf.d1 = [=](double x, double y, int t) {
    return std::pow(beta, t) * alpha * std::pow(x, alpha - 1.0) /
           consumption(x, y);
  };
  rf.d2 = [=](double x, double y, int t) {
    return -std::pow(beta, t) / consumption(x, y);
  };
  rf.d11 = [=](double x, double y, int t) {
    const double c = consumption(x, y);
    const double fp = alpha * std::pow(x, alpha - 1.0);   // f'
    const double fpp = alpha * (alpha - 1.0) * std::pow(x, alpha - 2.0);
    return std::pow(beta, t) * (fpp * c - fp * fp) / (c * c);
  };
  rf.d12 = [=](double x, double y, int t) {
    const double c = consumption(x, y);
    return std::pow(beta, t) * alpha * std::pow(x, alpha - 1.0) / (c * c);
  };
  rf.d21 = rf.d12;
  rf.d22 = [=](double x, double y, int t) {
    const double c = consumption(x, y);
    return -std::pow(beta, t) / (c * c);
  };

  Problem p;
  p.v = std::move(rf);
  p.x0 = params.k0;
  p.lower = 0.0;
  p.upper = 1.0;
  p.name = "growth";
  return p;
}

FiniteGrowthSolution growth_finite_closed_form(const GrowthParams& params,
                                               int T) {
  params.validate();
  if (T < 0) throw SizeError("growth_finite_closed_form: T must be >= 0");
  const double ab = params.alpha * params.beta;

  Eigen::VectorXd k(T + 2);
  k[0] = params.k0;
  for (int t = 0; t <= T; ++t) {
    const double save_rate =
        ab * (1.0 - std::pow(ab, T - t)) / (1.0 - std::pow(ab, T - t + 1));
    k[t + 1] = save_rate * std::pow(k[t], params.alpha);
  }
  // t = T gives k(T+1) = 0 exactly: the numerator 1 - ab^0 vanishes.

  Eigen::VectorXd c(T + 1);
  for (int t = 0; t <= T; ++t)
    c[t] = std::pow(k[t], params.alpha) - k[t + 1];

  FiniteGrowthSolution out;
  out.capital = Path(k.head(T + 1));
  out.consumption = std::move(c);
  return out;
}

LimitGrowthSolution growth_limit_closed_form(const GrowthParams& params,
                                             int window) {
  params.validate();
  if (window < 1)
    throw SizeError("growth_limit_closed_form: window must be >= 1");
  const double ab = params.alpha * params.beta;

  Eigen::VectorXd k(window + 1);
  k[0] = params.k0;  // exact start, not the closed form rounded through a ratio
  const double s = params.steady_state();
  for (int t = 1; t <= window; ++t)
    k[t] = s * std::pow(params.k0 / s, std::pow(params.alpha, t));

  Eigen::VectorXd c(window + 1), lambda(window + 1);
  for (int t = 0; t <= window; ++t) {
    c[t] = (1.0 - ab) * std::pow(k[t], params.alpha);
    lambda[t] = 1.0 / c[t];
  }

  LimitGrowthSolution out;
  out.capital = Path(std::move(k));
  out.consumption = std::move(c);
  out.shadow_price = std::move(lambda);
  return out;
}

void CounterexampleParams::validate() const {
  if (!(a >= 0.0))
    throw ParameterError("counterexample: a must be >= 0, got " +
                         std::to_string(a));
  if (!(b > 0.0))
    throw ParameterError("counterexample: b must be > 0, got " +
                         std::to_string(b));
}

Problem counterexample_problem(const CounterexampleParams& params) {
  params.validate();
  const double a = params.a;
  const double b = params.b;

  ReturnFunction rf;
  rf.feasible = [](double, double, int) { return true; };
  rf.eval = [=](double x, double y, int) {
    return -(x - a) * (x - a) - b * (y - x);
  };
  rf.d1 = [=](double x, double, int) { return -2.0 * (x - a) + b; };
  rf.d2 = [=](double, double, int) { return -b; };
  rf.d11 = [](double, double, int) { return -2.0; };
  rf.d12 = [](double, double, int) { return 0.0; };
  rf.d21 = [](double, double, int) { return 0.0; };
  rf.d22 = [](double, double, int) { return 0.0; };

  Problem p;
  p.v = std::move(rf);
  p.x0 = params.start();
  p.name = "counterexample";
  return p;
}

Path counterexample_solution(const CounterexampleParams& params, int T) {
  params.validate();
  if (T < 0) throw SizeError("counterexample_solution: T must be >= 0");
  if (params.start() != params.a)
    throw ParameterError(
        "counterexample_solution: the stationary solution requires x0 = a, "
        "got x0 = " +
        std::to_string(params.start()));
  return Path::constant(params.a, T);
}

namespace {

double param_or(const std::map<std::string, double>& params,
                const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

Problem model_registry(const std::string& name,
                       const std::map<std::string, double>& params) {
  if (name == "growth") {
    GrowthParams p;
    p.alpha = param_or(params, "alpha", p.alpha);
    p.beta = param_or(params, "beta", p.beta);
    p.k0 = param_or(params, "k0", p.k0);
    return growth_problem(p);
  }
  if (name == "counterexample") {
    CounterexampleParams p;
    p.a = param_or(params, "a", p.a);
    p.b = param_or(params, "b", p.b);
    if (params.count("x0")) p.x0 = params.at("x0");
    return counterexample_problem(p);
  }
  throw ParameterError("unknown model '" + name +
                       "' (expected growth or counterexample)");
}

}  // namespace horizon
