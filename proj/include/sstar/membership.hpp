#pragma once

// Disc-sampling checks of the two-sided argument condition
//   -pi alpha1 / 2 < arg(z f'(z) / f(z)) < pi alpha2 / 2
// and of its sufficient condition on 1 + z f''(z) / f'(z).
//
// Sampling can certify a violation but never membership, so a clean report
// means "no violation on this grid", nothing more.

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sstar/generator.hpp"
#include "sstar/series.hpp"

namespace sstar {

struct SampleGrid {
  std::vector<double> radii;   // strictly increasing, each in (0, 1)
  std::size_t angles_per_radius = 720;

  /// Throws InvalidGrid unless the invariants hold (radii strictly increasing
  /// in (0, 1), at least 8 angles).
  void validate() const;
  std::size_t total_samples() const { return radii.size() * angles_per_radius; }
  /// Sample index i -> radii[i / M] * exp(2 pi i (i % M) / M).
  cplx point(std::size_t index) const;
};

/// Radii 0.1, 0.2, ..., 0.9, 0.95, 0.99 with 720 angles each.
SampleGrid default_grid();

/// Value and first two derivatives of an analytic function at a point.
struct Jet {
  cplx f;
  cplx df;
  cplx d2f;
};

using AnalyticEvaluator = std::function<Jet(cplx)>;

struct Violation {
  cplx z;
  double arg;
};

struct ArgWindowReport {
  std::size_t total_samples = 0;
  std::vector<Violation> violations;
  double min_arg = 0.0;
  double max_arg = 0.0;
  bool passed = true;

  /// "no-violation-on-grid" or "violated".
  std::string status() const;
};

nlohmann::json report_to_json(const ArgWindowReport& report);

struct MembershipOptions {
  /// Widens both window edges, in radians.
  double arg_slack = 1e-9;
  /// A sample is rejected as a zero when |f(z)| <= guard * |z|
  /// (resp. |f'(z)| <= guard).
  double zero_guard = 1e-10;
};

/// zf'/f as a series, f'(z) * reciprocal(f(z) / z). f must have c0 = 0 and
/// c1 = 1 (NotNormalized otherwise). Result order is order(f) - 1.
TruncatedSeries ratio_series(const TruncatedSeries& f);

/// Tests arg(z f'/f) at every grid point. Sample evaluation runs in parallel;
/// the report is assembled in sample-index order and is identical to the
/// serial reference. Throws ZeroOfF or EvaluationFailure for the first
/// offending sample index.
ArgWindowReport check_membership(const AnalyticEvaluator& f, const ClassParams& params,
                                 const SampleGrid& grid, const MembershipOptions& opts = {});
ArgWindowReport check_membership_serial(const AnalyticEvaluator& f, const ClassParams& params,
                                        const SampleGrid& grid, const MembershipOptions& opts = {});

/// Largest admissible radius for the convexity-type condition,
/// 1 / (1 + 2 cos(pi theta / 2)).
double convexity_radius(const ClassParams& params);

/// Same report for w = 1 + z f''/f'. Every grid radius must be at most
/// convexity_radius(params) (RadiusOutOfRange otherwise). ZeroOfFPrime when
/// |f'| <= guard at a sample.
ArgWindowReport check_convexity_condition(const AnalyticEvaluator& f, const ClassParams& params,
                                          const SampleGrid& grid,
                                          const MembershipOptions& opts = {});
ArgWindowReport check_convexity_condition_serial(const AnalyticEvaluator& f,
                                                 const ClassParams& params,
                                                 const SampleGrid& grid,
                                                 const MembershipOptions& opts = {});

// Closed-form evaluators for the functions the tools know by name.

/// f(z) = z.
AnalyticEvaluator identity_evaluator();
/// f(z) = z / (1 - z)^2.
AnalyticEvaluator koebe_evaluator();
/// f(z) = z / (1 - z)^{2 beta}.
AnalyticEvaluator koebe_beta_evaluator(double beta);
/// f(z) = z exp G~(z); f' = exp(G~) G, so z f'/f = G exactly.
AnalyticEvaluator extremal_evaluator(const ClassParams& params);
/// Horner evaluation of a truncated series and its derivatives.
AnalyticEvaluator series_evaluator(const TruncatedSeries& f);

}  // namespace sstar
