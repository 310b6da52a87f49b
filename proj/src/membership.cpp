#include "sstar/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "sstar/errors.hpp"

namespace sstar {

void SampleGrid::validate() const {
  if (radii.empty()) throw InvalidGrid("no radii");
  if (angles_per_radius < 8) {
    throw InvalidGrid("angles_per_radius = " + std::to_string(angles_per_radius) + " (need >= 8)");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    if (!(r > 0.0 && r < 1.0)) throw InvalidGrid("radius " + std::to_string(r) + " not in (0, 1)");
    if (i > 0 && !(r > radii[i - 1])) throw InvalidGrid("radii must be strictly increasing");
  }
}

cplx SampleGrid::point(std::size_t index) const {
  const std::size_t m = angles_per_radius;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(index % m) / static_cast<double>(m);
  return std::polar(radii[index / m], angle);
}

SampleGrid default_grid() {
  return {{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99}, 720};
}

std::string ArgWindowReport::status() const { return passed ? "no-violation-on-grid" : "violated"; }

nlohmann::json report_to_json(const ArgWindowReport& report) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& violation : report.violations) {
    v.push_back({{"re", violation.z.real()}, {"im", violation.z.imag()}, {"arg", violation.arg}});
  }
  return {{"status", report.status()},
          {"total", report.total_samples},
          {"min_arg", report.min_arg},
          {"max_arg", report.max_arg},
          {"violations", v}};
}

TruncatedSeries ratio_series(const TruncatedSeries& f) {
  if (f.order() < 1) throw NotNormalized("order must be >= 1");
  if (std::abs(f[0]) > kConstantTermTol || std::abs(f[1] - cplx(1.0)) > kConstantTermTol) {
    throw NotNormalized("need f(0) = 0 and f'(0) = 1");
  }
  return derivative(f) * reciprocal(f.shifted_down(1));
}

namespace {

enum class SampleFault { none, zero, evaluation };

struct SampleResult {
  cplx z;
  double arg = 0.0;
  bool inside = true;
  SampleFault fault = SampleFault::none;
};

enum class Condition { starlike, convexity };

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

SampleResult evaluate_sample(const AnalyticEvaluator& f, const ClassParams& params,
                             const SampleGrid& grid, const MembershipOptions& opts,
                             Condition condition, std::size_t index) {
  SampleResult out;
  out.z = grid.point(index);
  Jet jet;
  try {
    jet = f(out.z);
  } catch (...) {
    out.fault = SampleFault::evaluation;
    return out;
  }
  cplx w;
  if (condition == Condition::starlike) {
    if (!finite(jet.f) || !finite(jet.df)) {
      out.fault = SampleFault::evaluation;
      return out;
    }
    if (std::abs(jet.f) <= opts.zero_guard * std::abs(out.z)) {
      out.fault = SampleFault::zero;
      return out;
    }
    // same direction as z f'/f; avoids the division so that f = z gives arg 0 exactly
    w = out.z * jet.df * std::conj(jet.f);
  } else {
    if (!finite(jet.df) || !finite(jet.d2f)) {
      out.fault = SampleFault::evaluation;
      return out;
    }
    if (std::abs(jet.df) <= opts.zero_guard) {
      out.fault = SampleFault::zero;
      return out;
    }
    w = 1.0 + out.z * jet.d2f / jet.df;
  }
  if (!finite(w) || w == cplx(0.0)) {
    out.fault = SampleFault::evaluation;
    return out;
  }
  out.arg = std::arg(w);
  out.inside = omega_contains(params, w, opts.arg_slack);
  return out;
}

// Folds per-sample results in index order, so the report never depends on
// how the samples were scheduled.
ArgWindowReport assemble(const std::vector<SampleResult>& samples, Condition condition) {
  ArgWindowReport report;
  report.total_samples = samples.size();
  report.min_arg = std::numeric_limits<double>::infinity();
  report.max_arg = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const SampleResult& s = samples[i];
    if (s.fault == SampleFault::zero) {
      const std::string where = "sample " + std::to_string(i) + " at z = (" +
                                std::to_string(s.z.real()) + ", " + std::to_string(s.z.imag()) + ")";
      if (condition == Condition::starlike) throw ZeroOfF(where);
      throw ZeroOfFPrime(where);
    }
    if (s.fault == SampleFault::evaluation) {
      throw EvaluationFailure("sample " + std::to_string(i) + " at z = (" +
                              std::to_string(s.z.real()) + ", " + std::to_string(s.z.imag()) + ")");
    }
    report.min_arg = std::min(report.min_arg, s.arg);
    report.max_arg = std::max(report.max_arg, s.arg);
    if (!s.inside) report.violations.push_back({s.z, s.arg});
  }
  report.passed = report.violations.empty();
  return report;
}

ArgWindowReport run_parallel(const AnalyticEvaluator& f, const ClassParams& params,
                             const SampleGrid& grid, const MembershipOptions& opts,
                             Condition condition) {
  grid.validate();
  std::vector<SampleResult> samples(grid.total_samples());
  const auto count = static_cast<long long>(samples.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < count; ++i) {
    samples[static_cast<std::size_t>(i)] =
        evaluate_sample(f, params, grid, opts, condition, static_cast<std::size_t>(i));
  }
  return assemble(samples, condition);
}

ArgWindowReport run_serial(const AnalyticEvaluator& f, const ClassParams& params,
                           const SampleGrid& grid, const MembershipOptions& opts,
                           Condition condition) {
  grid.validate();
  std::vector<SampleResult> samples(grid.total_samples());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = evaluate_sample(f, params, grid, opts, condition, i);
  }
  return assemble(samples, condition);
}

void require_convexity_radius(const ClassParams& params, const SampleGrid& grid) {
  const double limit = convexity_radius(params);
  for (double r : grid.radii) {
    if (r > limit * (1.0 + 1e-15)) {
      throw RadiusOutOfRange("radius " + std::to_string(r) + " exceeds " + std::to_string(limit));
    }
  }
}

}  // namespace

ArgWindowReport check_membership(const AnalyticEvaluator& f, const ClassParams& params,
                                 const SampleGrid& grid, const MembershipOptions& opts) {
  return run_parallel(f, params, grid, opts, Condition::starlike);
}

ArgWindowReport check_membership_serial(const AnalyticEvaluator& f, const ClassParams& params,
                                        const SampleGrid& grid, const MembershipOptions& opts) {
  return run_serial(f, params, grid, opts, Condition::starlike);
}

double convexity_radius(const ClassParams& params) {
  return 1.0 / (1.0 + 2.0 * params.half_angle_cos());
}

ArgWindowReport check_convexity_condition(const AnalyticEvaluator& f, const ClassParams& params,
                                          const SampleGrid& grid, const MembershipOptions& opts) {
  grid.validate();
  require_convexity_radius(params, grid);
  return run_parallel(f, params, grid, opts, Condition::convexity);
}

ArgWindowReport check_convexity_condition_serial(const AnalyticEvaluator& f,
                                                 const ClassParams& params,
                                                 const SampleGrid& grid,
                                                 const MembershipOptions& opts) {
  grid.validate();
  require_convexity_radius(params, grid);
  return run_serial(f, params, grid, opts, Condition::convexity);
}

AnalyticEvaluator identity_evaluator() {
  return [](cplx z) { return Jet{z, 1.0, 0.0}; };
}

AnalyticEvaluator koebe_evaluator() {
  return [](cplx z) {
    const cplx q = 1.0 - z;
    return Jet{z / (q * q), (1.0 + z) / (q * q * q), (4.0 + 2.0 * z) / (q * q * q * q)};
  };
}

AnalyticEvaluator koebe_beta_evaluator(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw ParamOutOfRange("beta = " + std::to_string(beta) + " not in (0, 1]");
  }
  return [beta](cplx z) {
    // f = z q^{-2b}, q = 1 - z
    const double b2 = 2.0 * beta;
    const cplx q = 1.0 - z;
    const cplx qp = std::pow(q, -b2);
    const cplx f = z * qp;
    const cplx df = qp / q * (1.0 + (b2 - 1.0) * z);
    const cplx d2f = qp / (q * q) * (2.0 * b2 + b2 * (b2 - 1.0) * z);
    return Jet{f, df, d2f};
  };
}

AnalyticEvaluator extremal_evaluator(const ClassParams& params) {
  return [params](cplx z) {
    const cplx e = std::exp(g_tilde_eval(params, z));
    const cplx g = g_eval(params, z);
    const cplx gp = g_prime_eval(params, z);
    // f'' = e ((G - 1) G / z + G'), with (G - 1) / z -> lambda_1 at the origin
    const cplx g_minus_one_over_z = z == cplx(0.0) ? params.p * (1.0 + params.c) : (g - 1.0) / z;
    return Jet{z * e, e * g, e * (g_minus_one_over_z * g + gp)};
  };
}

AnalyticEvaluator series_evaluator(const TruncatedSeries& f) {
  const TruncatedSeries d1 = derivative(f);
  const TruncatedSeries d2 = derivative(d1);
  return [f, d1, d2](cplx z) {
    return Jet{eval_at(f, z).value, eval_at(d1, z).value, eval_at(d2, z).value};
  };
}

}  // namespace sstar
