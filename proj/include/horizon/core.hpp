#pragma once

#include <Eigen/Core>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "horizon/errors.hpp"

namespace horizon {

// ---------------------------------------------------------------------------
// Return function and problem
// ---------------------------------------------------------------------------

/// Per-period return v(x, y, t) for state x, next state y, time t, together
/// with its first and second partials and a domain predicate. Evaluation at
/// an infeasible point is an explicit error, never a non-finite value, so
/// partial sums stay finite and auditable.
struct ReturnFunction {
  using Eval = std::function<double(double x, double y, int t)>;
  using Domain = std::function<bool(double x, double y, int t)>;

  Eval eval;
  Eval d1, d2;              // partials in x and y
  Eval d11, d12, d21, d22;  // second partials
  Domain feasible;

  /// Guarded evaluation: throws FeasibilityError when (x, y, t) is outside
  /// the domain.
  double value(double x, double y, int t) const;

  /// Throws FeasibilityError when (x, y, t) is outside the domain.
  void require_feasible(double x, double y, int t) const;

  /// Builds a ReturnFunction from a bare evaluator, filling all partials
  /// with central finite differences. `scale` sets the difference step for
  /// arguments near zero.
  static ReturnFunction from_eval(Eval eval, Domain feasible,
                                  double scale = 1.0);
};

/// Scalar-state infinite-horizon problem: return function, start value, and
/// open-interval admissible set (lower, upper), either bound possibly
/// infinite.
struct Problem {
  ReturnFunction v;
  double x0 = 0.0;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  std::string name;

  bool contains(double x) const { return lower < x && x < upper; }
  bool has_finite_bounds() const {
    return std::isfinite(lower) && std::isfinite(upper);
  }
};

// ---------------------------------------------------------------------------
// Paths and truncation
// ---------------------------------------------------------------------------

/// Finite sample x(0), ..., x(N) of a state trajectory. Immutable after
/// construction.
class Path {
 public:
  Path() = default;
  explicit Path(Eigen::VectorXd values) : values_(std::move(values)) {}

  static Path constant(double value, int horizon) {
    return Path(Eigen::VectorXd::Constant(horizon + 1, value));
  }

  /// N: the largest sampled time index.
  int horizon() const { return static_cast<int>(values_.size()) - 1; }
  Eigen::Index size() const { return values_.size(); }
  bool empty() const { return values_.size() == 0; }
  double operator[](int t) const { return values_[t]; }
  const Eigen::VectorXd& values() const { return values_; }

  /// Copy of this path with x(N+1) = value appended (eating-up boundary).
  Path with_appended(double value) const;

 private:
  Eigen::VectorXd values_;
};

/// Eating-up view of a path truncated at T: agrees with the base on [0, T]
/// and is identically 0 from T+1 on. Holds a reference; the base path must
/// outlive the view.
class TruncatedView {
 public:
  TruncatedView(const Path& base, int truncation)
      : base_(&base), truncation_(truncation) {}

  double operator()(int t) const {
    return t <= truncation_ ? (*base_)[t] : 0.0;
  }
  int truncation() const { return truncation_; }

  /// Realizes the view as a plain path of the given horizon.
  Path materialize(int horizon) const;

 private:
  const Path* base_;
  int truncation_;
};

/// Truncation operator. Throws SizeError when T exceeds the path horizon.
TruncatedView truncate(const Path& path, int T);

/// Verdict of the attainability check; `first_violation` is the earliest
/// failing time index, or -1 when attainable.
struct Attainability {
  bool attainable = false;
  int first_violation = -1;
  explicit operator bool() const { return attainable; }
};

/// True iff the path starts exactly at the problem's x0 and stays strictly
/// inside (lower, upper) through its horizon.
Attainability is_attainable(const Problem& problem, const Path& path);

/// Partial return of the truncated path:
/// sum_{t=0}^{T} v(xt(t), xt(t+1), t) where xt is the eating-up truncation
/// of `path` at T; the t = T term is v(x(T), 0, T). Throws FeasibilityError
/// (carrying t) on an infeasible transition, SizeError when T > horizon.
double truncated_sum(const Problem& problem, const Path& path, int T);

}  // namespace horizon
