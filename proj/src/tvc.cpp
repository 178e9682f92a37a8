#include "horizon/tvc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace horizon {

const char* to_string(TvcVerdict verdict) {
  switch (verdict) {
    case TvcVerdict::HoldsEqZero: return "holds_eq_zero";
    case TvcVerdict::HoldsLiminfNonneg: return "holds_liminf_nonneg";
    case TvcVerdict::HoldsLimsupNonneg: return "holds_limsup_nonneg";
    case TvcVerdict::Violated: return "violated";
    case TvcVerdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

Eigen::Index pick_window(const TvcOptions& opts, Eigen::Index len) {
  if (opts.window > 0) return std::min(opts.window, len);
  return std::clamp<Eigen::Index>(len / 4, 1, 50);
}

bool within_zero_band(const TailEstimate& tail, double band) {
  return std::abs(tail.tail_inf) <= band && std::abs(tail.tail_sup) <= band &&
         (tail.trend == Trend::DecreasingToZero ||
          tail.trend == Trend::Constant);
}

// Condition "limit equals zero": a tail bounded away from zero on either
// side refutes it.
TvcVerdict classify_zero_limit(const TailEstimate& tail, double band) {
  if (within_zero_band(tail, band)) return TvcVerdict::HoldsEqZero;
  if (tail.tail_inf > band || tail.tail_sup < -band)
    return TvcVerdict::Violated;
  return TvcVerdict::Indeterminate;
}

// One-sided condition: report the strongest nonnegativity form the tails
// support; both liminf- and limsup-side checks fail only when the whole
// window sits below the band.
TvcVerdict classify_one_sided(const TailEstimate& tail, double band) {
  if (within_zero_band(tail, band)) return TvcVerdict::HoldsEqZero;
  if (tail.tail_inf >= -band) return TvcVerdict::HoldsLiminfNonneg;
  if (tail.tail_sup >= -band) return TvcVerdict::HoldsLimsupNonneg;
  return TvcVerdict::Violated;
}

double eating_up_bracket(const Problem& problem, const Path& x, int T) {
  problem.v.require_feasible(x[T - 1], x[T], T - 1);
  problem.v.require_feasible(x[T], 0.0, T);
  return problem.v.d2(x[T - 1], x[T], T - 1) + problem.v.d1(x[T], 0.0, T);
}

}  // namespace

TvcSeries kamihigashi_series(const Problem& problem, const Path& path,
                             int Tmax, const TvcOptions& opts) {
  if (Tmax < 1) throw SizeError("kamihigashi_series: Tmax must be >= 1");
  if (path.horizon() < Tmax)
    throw SizeError("kamihigashi_series: path must reach t = " +
                    std::to_string(Tmax));

  TvcSeries out;
  out.first_T = 0;
  out.series.resize(Tmax);
  for (int T = 0; T < Tmax; ++T) {
    problem.v.require_feasible(path[T], path[T + 1], T);
    out.series[T] = -problem.v.d2(path[T], path[T + 1], T) * path[T + 1];
  }
  out.tail = tail_estimate(out.series, pick_window(opts, out.series.size()));
  out.verdict = classify_zero_limit(out.tail, opts.zero_band);
  return out;
}

TvcSeries eating_up_series(const Problem& problem, const Path& path, int Tmax,
                           const TvcOptions& opts) {
  if (Tmax < 1) throw SizeError("eating_up_series: Tmax must be >= 1");
  if (path.horizon() < Tmax)
    throw SizeError("eating_up_series: path must reach t = " +
                    std::to_string(Tmax));

  TvcSeries out;
  out.first_T = 1;
  out.series.resize(Tmax);
  for (int T = 1; T <= Tmax; ++T)
    out.series[T - 1] = eating_up_bracket(problem, path, T) * path[T];
  out.tail = tail_estimate(out.series, pick_window(opts, out.series.size()));
  out.verdict = classify_one_sided(out.tail, opts.zero_band);
  return out;
}

TvcSeries directional_tvc(const Problem& problem, const Path& path,
                          const DirectionFn& direction, int Tmax,
                          const TvcOptions& opts) {
  if (Tmax < 1) throw SizeError("directional_tvc: Tmax must be >= 1");
  if (path.horizon() < Tmax)
    throw SizeError("directional_tvc: path must reach t = " +
                    std::to_string(Tmax));
  if (direction(0) != 0.0)
    throw Error("directional_tvc: direction must vanish at t = 0");

  TvcSeries out;
  out.first_T = 1;
  out.series.resize(Tmax);
  for (int T = 1; T <= Tmax; ++T) {
    const double p = direction(T);
    // Skip the bracket when the direction vanishes, so unused path entries
    // are never evaluated.
    out.series[T - 1] =
        p == 0.0 ? 0.0 : eating_up_bracket(problem, path, T) * p;
  }
  out.tail = tail_estimate(out.series, pick_window(opts, out.series.size()));
  out.verdict = TvcVerdict::Indeterminate;
  return out;
}

TvcReport tvc_report(const Problem& problem, const Path& path, int Tmax,
                     const TvcOptions& opts) {
  return {kamihigashi_series(problem, path, Tmax, opts),
          eating_up_series(problem, path, Tmax, opts)};
}

AssumptionDiagnostics assumption_diagnostics(const Problem& problem,
                                             double sample_lo,
                                             double sample_hi, int n_samples,
                                             std::uint64_t seed, double tol) {
  if (!(sample_lo < sample_hi))
    throw SizeError("assumption_diagnostics: empty sample region");
  if (!(problem.contains(sample_lo) && problem.contains(sample_hi)))
    throw SizeError("assumption_diagnostics: sample region outside bounds");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(sample_lo, sample_hi);
  std::uniform_real_distribution<double> theta_dist(0.0, 1.0);

  AssumptionDiagnostics diag;
  const int max_attempts = 100 * n_samples + 1000;
  int attempts = 0;
  const int t = 0;
  while (diag.samples < n_samples && attempts < max_attempts) {
    ++attempts;
    const double x1 = coord(rng), y1 = coord(rng);
    const double x2 = coord(rng), y2 = coord(rng);
    const double theta = theta_dist(rng);
    const double xm = theta * x1 + (1.0 - theta) * x2;
    const double ym = theta * y1 + (1.0 - theta) * y2;
    if (!problem.v.feasible(x1, y1, t) || !problem.v.feasible(x2, y2, t) ||
        !problem.v.feasible(xm, ym, t))
      continue;
    ++diag.samples;

    const double lhs = problem.v.eval(xm, ym, t);
    const double rhs = theta * problem.v.eval(x1, y1, t) +
                       (1.0 - theta) * problem.v.eval(x2, y2, t);
    if (lhs < rhs - tol) ++diag.concavity_violations;

    if (problem.v.d12(x1, y1, t) < -tol)
      ++diag.cross_partial_sign_violations;

    const double h = 1e-7 * (1.0 + std::abs(x1));
    if (problem.v.feasible(x1 + h, y1, t)) {
      const double jump =
          std::abs(problem.v.eval(x1 + h, y1, t) - problem.v.eval(x1, y1, t));
      diag.continuity_probe = std::max(diag.continuity_probe, jump);
    }
  }
  return diag;
}

}  // namespace horizon
