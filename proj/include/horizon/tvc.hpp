#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>

#include "horizon/core.hpp"
#include "horizon/numerics.hpp"

namespace horizon {

enum class TvcVerdict {
  HoldsEqZero,
  HoldsLiminfNonneg,
  HoldsLimsupNonneg,
  Violated,
  Indeterminate,
};

const char* to_string(TvcVerdict verdict);

struct TvcOptions {
  double zero_band = 1e-6;  // |tail| band for HOLDS_EQ_ZERO
  Eigen::Index window = 0;  // tail window; 0 = clamp(len/4, 1, 50)
};

/// One transversality series along a path: values over T = first_T ..
/// first_T + len - 1, its tail estimate, and a verdict.
struct TvcSeries {
  int first_T = 0;
  Eigen::VectorXd series;
  TailEstimate tail;
  TvcVerdict verdict = TvcVerdict::Indeterminate;
};

/// Terminal co-state series K(T) = -v2(x(T), x(T+1), T) * x(T+1) for
/// T = 0..Tmax-1. The associated condition demands a zero limit, so the
/// verdict is HOLDS_EQ_ZERO, VIOLATED (tail bounded away from zero), or
/// INDETERMINATE. Requires the path to reach t = Tmax.
TvcSeries kamihigashi_series(const Problem& problem, const Path& path,
                             int Tmax, const TvcOptions& opts = {});

/// Eating-up series E(T) = (v2(x(T-1), x(T), T-1) + v1(x(T), 0, T)) * x(T)
/// for T = 1..Tmax. The condition is one-sided (liminf- or limsup-
/// nonnegativity depending on the admissible perturbation side), so both
/// tails feed the verdict.
TvcSeries eating_up_series(const Problem& problem, const Path& path, int Tmax,
                           const TvcOptions& opts = {});

/// Perturbation direction p(t), required to vanish at t = 0.
using DirectionFn = std::function<double(int t)>;

/// Directional series (v2(x(T-1), x(T), T-1) + v1(x(T), 0, T)) * p(T) for
/// T = 1..Tmax; with p(t) = x(t) this is exactly the eating-up series. Both
/// tails are reported; no verdict is attached.
TvcSeries directional_tvc(const Problem& problem, const Path& path,
                          const DirectionFn& direction, int Tmax,
                          const TvcOptions& opts = {});

struct TvcReport {
  TvcSeries kamihigashi;
  TvcSeries eating_up;
};

/// Convenience bundle of both built-in series at the same Tmax.
TvcReport tvc_report(const Problem& problem, const Path& path, int Tmax,
                     const TvcOptions& opts = {});

/// Sampled checks of the concavity and cross-partial sign assumptions over
/// the square (sample_lo, sample_hi)^2 intersected with the domain, plus a
/// small-step continuity probe (largest |v(p+h) - v(p)| observed).
struct AssumptionDiagnostics {
  int samples = 0;
  int concavity_violations = 0;
  int cross_partial_sign_violations = 0;  // d12 < -tol occurrences
  double continuity_probe = 0.0;
};

AssumptionDiagnostics assumption_diagnostics(const Problem& problem,
                                             double sample_lo,
                                             double sample_hi, int n_samples,
                                             std::uint64_t seed = 20107,
                                             double tol = 1e-9);

}  // namespace horizon
