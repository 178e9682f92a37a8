#include "horizon/core.hpp"

#include <cmath>
#include <sstream>

#include "horizon/numerics.hpp"

namespace horizon {

void ReturnFunction::require_feasible(double x, double y, int t) const {
  if (!feasible(x, y, t)) {
    std::ostringstream msg;
    msg << "infeasible transition (x=" << x << ", y=" << y << ", t=" << t
        << ")";
    throw FeasibilityError(msg.str(), t);
  }
}

double ReturnFunction::value(double x, double y, int t) const {
  require_feasible(x, y, t);
  return eval(x, y, t);
}

ReturnFunction ReturnFunction::from_eval(Eval eval, Domain feasible,
                                         double scale) {
  ReturnFunction rf;
  rf.eval = eval;
  rf.feasible = std::move(feasible);

  auto guarded = [eval, dom = rf.feasible](double x, double y, int t) {
    if (!dom(x, y, t))
      throw FeasibilityError("finite-difference stencil left the domain", t);
    return eval(x, y, t);
  };
  auto d1 = [guarded, scale](double x, double y, int t) {
    return central_diff([&](double s) { return guarded(s, y, t); }, x, scale);
  };
  auto d2 = [guarded, scale](double x, double y, int t) {
    return central_diff([&](double s) { return guarded(x, s, t); }, y, scale);
  };
  rf.d1 = d1;
  rf.d2 = d2;
  rf.d11 = [d1, scale](double x, double y, int t) {
    return central_diff([&](double s) { return d1(s, y, t); }, x, scale);
  };
  rf.d12 = [d1, scale](double x, double y, int t) {
    return central_diff([&](double s) { return d1(x, s, t); }, y, scale);
  };
  rf.d21 = [d2, scale](double x, double y, int t) {
    return central_diff([&](double s) { return d2(s, y, t); }, x, scale);
  };
  rf.d22 = [d2, scale](double x, double y, int t) {
    return central_diff([&](double s) { return d2(x, s, t); }, y, scale);
  };
  return rf;
}

Path Path::with_appended(double value) const {
  Eigen::VectorXd v(values_.size() + 1);
  v.head(values_.size()) = values_;
  v[values_.size()] = value;
  return Path(std::move(v));
}

Path TruncatedView::materialize(int horizon) const {
  Eigen::VectorXd v(horizon + 1);
  for (int t = 0; t <= horizon; ++t) v[t] = (*this)(t);
  return Path(std::move(v));
}

TruncatedView truncate(const Path& path, int T) {
  if (T < 0) throw SizeError("truncate: T must be nonnegative");
  if (T > path.horizon())
    throw SizeError("truncate: T = " + std::to_string(T) +
                    " exceeds path horizon " + std::to_string(path.horizon()));
  return TruncatedView(path, T);
}

Attainability is_attainable(const Problem& problem, const Path& path) {
  if (path.empty()) return {false, 0};
  if (path[0] != problem.x0) return {false, 0};
  for (int t = 0; t <= path.horizon(); ++t) {
    if (!problem.contains(path[t])) return {false, t};
  }
  return {true, -1};
}

double truncated_sum(const Problem& problem, const Path& path, int T) {
  const TruncatedView view = truncate(path, T);
  double sum = 0.0;
  for (int t = 0; t <= T; ++t) {
    sum += problem.v.value(view(t), view(t + 1), t);
  }
  return sum;
}

}  // namespace horizon
