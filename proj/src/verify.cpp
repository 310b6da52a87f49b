#include "sstar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <regex>
#include <stdexcept>

#include "sstar/bounds.hpp"
#include "sstar/errors.hpp"
#include "sstar/extremal.hpp"
#include "sstar/format.hpp"
#include "sstar/generator.hpp"
#include "sstar/membership.hpp"
#include "sstar/series.hpp"

namespace sstar {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void near(const std::string& id, double observed, double expected, double tol) {
    count(id);
    if (!(std::abs(observed - expected) <= tol)) {
      report_.failures.push_back({id, format_number(expected), format_number(observed), tol});
    }
  }

  /// observed <= tol
  void small(const std::string& id, double observed, double tol) {
    count(id);
    if (!(observed <= tol)) {
      report_.failures.push_back({id, "<= " + format_number(tol), format_number(observed), tol});
    }
  }

  void holds(const std::string& id, bool ok, const std::string& expected, const std::string& observed) {
    count(id);
    if (!ok) report_.failures.push_back({id, expected, observed, 0.0});
  }

  /// Runs a case body; an unexpected exception is recorded as a failure.
  void guarded(const std::string& id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      count(id);
      report_.failures.push_back({id, "no exception", e.what(), 0.0});
    }
  }

  VerifyReport take() { return std::move(report_); }

 private:
  // Case ids look like "<instance>/<check>(<params>)"; dropping the instance
  // and any numeric parenthesized part leaves the check family.
  void count(const std::string& id) {
    ++report_.cases_run;
    static const std::regex numeric_group(R"(\([-0-9.,]*\))");
    const auto slash = id.rfind('/');
    std::string family =
        std::regex_replace(slash == std::string::npos ? id : id.substr(slash + 1), numeric_group, "");
    if (std::find(report_.checks.begin(), report_.checks.end(), family) == report_.checks.end()) {
      report_.checks.push_back(std::move(family));
    }
  }

  VerifyReport report_;
};

using Rng = std::mt19937_64;

double unit_open_closed(Rng& rng) {
  // (0, 1]
  return 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

ClassParams random_params(Rng& rng) {
  const double a1 = unit_open_closed(rng);
  const double a2 = unit_open_closed(rng);
  return make_params(a1, a2);
}

cplx random_in_disc(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  cplx v;
  do {
    v = {u(rng), u(rng)};
  } while (std::abs(v) > 1.0);
  return radius * v;
}

// c_0 = c0, |c_n| <= 10 * 2^-n: magnitudes stay <= 10 and the series is
// analytic on |z| < 2, which keeps exp / log recursions well conditioned.
TruncatedSeries random_series(Rng& rng, std::size_t order, cplx c0) {
  std::vector<cplx> c(order + 1);
  c[0] = c0;
  for (std::size_t n = 1; n <= order; ++n) c[n] = random_in_disc(rng, 10.0 * std::pow(0.5, n));
  return TruncatedSeries(std::move(c));
}

std::string params_id(const ClassParams& p) {
  return "(" + format_number(p.alpha1) + "," + format_number(p.alpha2) + ")";
}

// ---------------------------------------------------------------------------

VerifyReport series_suite(std::uint64_t seed) {
  Recorder rec("series");
  Rng rng(seed);
  for (std::size_t order : {4, 16, 32, 64}) {
    for (int t = 0; t < 10; ++t) {
      const std::string id = "order" + std::to_string(order) + "/draw" + std::to_string(t);
      const TruncatedSeries a = random_series(rng, order, 0.0);
      const TruncatedSeries b = random_series(rng, order, 0.0);
      const TruncatedSeries c = random_series(rng, order, 0.0);
      const TruncatedSeries e = exp_series(a);

      rec.small(id + "/log(exp(a))=a", max_coeff_distance(log_series(e), a), 1e-10);
      rec.small(id + "/exp(log(b))=b", max_coeff_distance(exp_series(log_series(e)), e), 1e-10);
      const double p = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
      rec.small(id + "/pow(b,p)pow(b,-p)=1",
                max_coeff_distance(pow_series(e, p) * pow_series(e, -p),
                                   TruncatedSeries::constant(1.0, order)),
                1e-10);

      const cplx s = random_in_disc(rng, 3.0);
      rec.small(id + "/derivative linear",
                max_coeff_distance(derivative(a + s * b), derivative(a) + s * derivative(b)), 1e-12);

      const TruncatedSeries integ = integrate_dz_over_z(a);
      double worst = 0.0;
      for (std::size_t n = 1; n <= order; ++n) {
        const cplx back = integ[n] * static_cast<double>(n);
        worst = std::max(worst, std::abs(back - a[n]) / std::max(1.0, std::abs(a[n])));
      }
      rec.small(id + "/n * integrate_dz_over_z recovers input", worst, 1e-14);

      rec.small(id + "/mul commutative", max_coeff_distance(a * b, b * a), 1e-12);
      rec.small(id + "/mul associative", max_coeff_distance((a * b) * c, a * (b * c)), 1e-12);
      rec.holds(id + "/hadamard commutative", max_coeff_distance(hadamard(a, b), hadamard(b, a)) == 0.0,
                "exact", format_number(max_coeff_distance(hadamard(a, b), hadamard(b, a))));
      rec.small(id + "/hadamard distributes",
                max_coeff_distance(hadamard(a, b + c), hadamard(a, b) + hadamard(a, c)), 1e-14);
    }
  }
  return rec.take();
}

VerifyReport generator_suite(std::uint64_t seed) {
  Recorder rec("generator");
  Rng rng(seed + 1);
  const SampleGrid image_grid = default_grid();

  for (int t = 0; t < 100; ++t) {
    const ClassParams params = random_params(rng);
    const std::string id = "draw" + std::to_string(t) + params_id(params);
    rec.guarded(id, [&] {
      const auto lambda = lambda_coeffs(params, 40);
      double worst = 0.0;
      for (std::size_t n = 1; n <= 40; ++n) {
        const cplx alt = lambda_via_2f1(params, n);
        worst = std::max(worst, std::abs(lambda[n - 1] - alt) / (1.0 + std::abs(lambda[n - 1])));
      }
      rec.small(id + "/lambda dual-formula residual", worst, 1e-10);

      const TruncatedSeries g = g_series(params, 64);
      double rec_vs_sum = 0.0;
      for (std::size_t n = 1; n <= 40; ++n) rec_vs_sum = std::max(rec_vs_sum, std::abs(g[n] - lambda[n - 1]));
      rec.small(id + "/g_series matches lambda sum", rec_vs_sum, 1e-10);

      std::vector<cplx> one_minus_z(65), numer(65);
      one_minus_z[0] = 1.0;
      one_minus_z[1] = -1.0;
      numer[0] = 1.0;
      numer[1] = params.c;
      const TruncatedSeries mobius = TruncatedSeries(numer) * reciprocal(TruncatedSeries(one_minus_z));
      rec.small(id + "/g_series matches pow of Mobius series",
                max_coeff_distance(g, pow_series(mobius, params.p)), 1e-10);

      double closed_vs_series = 0.0;
      for (int k = 0; k < 16; ++k) {
        const cplx z = random_in_disc(rng, 0.7);
        closed_vs_series = std::max(closed_vs_series, std::abs(g_eval(params, z) - eval_at(g, z).value));
      }
      rec.small(id + "/g_eval matches series on |z|<=0.7", closed_vs_series, 1e-8);

      const ClassParams swapped = make_params(params.alpha2, params.alpha1);
      const auto lambda_swapped = lambda_coeffs(swapped, 40);
      double conj_gap = 0.0;
      for (std::size_t n = 0; n < 40; ++n) {
        conj_gap = std::max(conj_gap, std::abs(lambda_swapped[n] - std::conj(lambda[n])));
      }
      rec.small(id + "/swap conjugates lambda", conj_gap, 1e-12);

      const TruncatedSeries tilde = g_tilde_series(params, 64);
      double tilde_gap = 0.0;
      for (std::size_t n = 1; n <= 64; ++n) {
        tilde_gap = std::max(tilde_gap, std::abs(tilde[n] * static_cast<double>(n) - g[n]));
      }
      rec.small(id + "/n * g_tilde coefficient = lambda_n", tilde_gap, 1e-13);
    });
  }

  // G maps the disc into Omega; sampled on the default grid.
  for (const ClassParams& params :
       {make_params(1, 1), make_params(0.5, 0.5), make_params(0.3, 0.9), make_params(0.9, 0.2),
        make_params(0.05, 1.0)}) {
    std::size_t outside = 0;
    for (std::size_t i = 0; i < image_grid.total_samples(); ++i) {
      if (!omega_contains(params, g_eval(params, image_grid.point(i)))) ++outside;
    }
    rec.holds("image in Omega" + params_id(params), outside == 0, "0 samples outside",
              std::to_string(outside) + " samples outside");
  }
  return rec.take();
}

VerifyReport membership_suite(std::uint64_t seed) {
  Recorder rec("membership");
  Rng rng(seed + 2);
  const SampleGrid grid{{0.2, 0.5, 0.8, 0.95}, 240};

  // Rotation covariance f_mu(z) = f(mu z) / mu on a full angular grid.
  for (int t = 0; t < 6; ++t) {
    const ClassParams params = random_params(rng);
    const AnalyticEvaluator base = extremal_evaluator(params);
    const std::size_t shift = 1 + std::uniform_int_distribution<std::size_t>(0, grid.angles_per_radius - 2)(rng);
    const cplx mu = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(shift) /
                                        static_cast<double>(grid.angles_per_radius));
    const AnalyticEvaluator rotated = [base, mu](cplx z) {
      const Jet j = base(mu * z);
      return Jet{j.f / mu, j.df, j.d2f * mu};
    };
    std::vector<double> args_base, args_rot;
    for (std::size_t i = 0; i < grid.total_samples(); ++i) {
      const cplx z = grid.point(i);
      const Jet jb = base(z);
      const Jet jr = rotated(z);
      args_base.push_back(std::arg(z * jb.df / jb.f));
      args_rot.push_back(std::arg(z * jr.df / jr.f));
    }
    std::sort(args_base.begin(), args_base.end());
    std::sort(args_rot.begin(), args_rot.end());
    double gap = 0.0;
    for (std::size_t i = 0; i < args_base.size(); ++i) gap = std::max(gap, std::abs(args_base[i] - args_rot[i]));
    const std::string id = "rotation" + params_id(params);
    rec.small(id + "/sorted args agree", gap, 1e-10);
    rec.holds(id + "/passed invariant",
              check_membership(base, params, grid).passed == check_membership(rotated, params, grid).passed,
              "same status", "status differs");
  }

  // Refinement keeps violations.
  {
    const ClassParams params = make_params(0.5, 0.5);
    const SampleGrid coarse{{0.5, 0.9}, 16};
    const SampleGrid fine{{0.3, 0.5, 0.7, 0.9, 0.99}, 64};
    const auto f = koebe_beta_evaluator(1.0);
    const ArgWindowReport rc = check_membership(f, params, coarse);
    const ArgWindowReport rf = check_membership(f, params, fine);
    rec.holds("refinement/coarse fails", !rc.passed, "violated", rc.status());
    rec.holds("refinement/fine fails", !rf.passed, "violated", rf.status());
    std::size_t missing = 0;
    for (const Violation& v : rc.violations) {
      const bool found = std::any_of(rf.violations.begin(), rf.violations.end(),
                                     [&](const Violation& w) { return std::abs(w.z - v.z) < 1e-12; });
      if (!found) ++missing;
    }
    rec.holds("refinement/coarse violations persist", missing == 0, "0 missing",
              std::to_string(missing) + " missing");
  }

  // Window monotonicity: passing with (a1, a2) implies passing with larger angles.
  for (int t = 0; t < 6; ++t) {
    const ClassParams params = random_params(rng);
    const AnalyticEvaluator f = extremal_evaluator(params);
    const ArgWindowReport base = check_membership(f, params, grid);
    const double a1 = params.alpha1 + (1.0 - params.alpha1) * unit_open_closed(rng);
    const double a2 = params.alpha2 + (1.0 - params.alpha2) * unit_open_closed(rng);
    const ArgWindowReport wider = check_membership(f, make_params(a1, a2), grid);
    rec.holds("window monotone" + params_id(params), !base.passed || wider.passed, "passes wider window",
              wider.status());
  }

  // Series ratio against pointwise z f'/f.
  for (int t = 0; t < 6; ++t) {
    const ClassParams params = random_params(rng);
    const NormalizedFunction f = extremal_series(params, 48);
    const TruncatedSeries ratio = ratio_series(f.series());
    const AnalyticEvaluator pointwise = extremal_evaluator(params);
    double worst = 0.0;
    for (int k = 0; k < 16; ++k) {
      const cplx z = random_in_disc(rng, 0.5);
      const Jet j = pointwise(z);
      worst = std::max(worst, std::abs(eval_at(ratio, z).value - z * j.df / j.f));
    }
    rec.small("ratio_series vs pointwise" + params_id(params), worst, 1e-8);
  }

  // Serial and parallel reports coincide.
  {
    const ClassParams params = make_params(0.4, 0.4);
    const auto f = koebe_beta_evaluator(0.5);
    const ArgWindowReport par = check_membership(f, params, default_grid());
    const ArgWindowReport ser = check_membership_serial(f, params, default_grid());
    bool same = par.violations.size() == ser.violations.size() && par.min_arg == ser.min_arg &&
                par.max_arg == ser.max_arg;
    for (std::size_t i = 0; same && i < par.violations.size(); ++i) {
      same = par.violations[i].z == ser.violations[i].z && par.violations[i].arg == ser.violations[i].arg;
    }
    rec.holds("parallel report == serial report", same, "identical", "differs");
  }

  // The convexity-type condition and the starlike condition it implies, on a
  // sub-disc where the Koebe function satisfies both (1 + z f''/f' vanishes at
  // z = -(2 - sqrt 3), so r must stay below 0.2679).
  {
    const ClassParams params = make_params(1, 1);
    const SampleGrid small{{0.1, 0.2, 0.25}, 360};
    const ArgWindowReport conv = check_convexity_condition(koebe_evaluator(), params, small);
    const ArgWindowReport star = check_membership(koebe_evaluator(), params, small);
    rec.holds("koebe convexity condition on r<=0.25", conv.passed, "no-violation-on-grid", conv.status());
    rec.holds("koebe starlike condition on r<=0.25", star.passed, "no-violation-on-grid", star.status());
  }
  for (int t = 0; t < 4; ++t) {
    const ClassParams params = random_params(rng);
    const double limit = convexity_radius(params);
    const SampleGrid sub{{0.25 * limit, 0.5 * limit, limit}, 180};
    const AnalyticEvaluator f = extremal_evaluator(params);
    const ArgWindowReport conv = check_convexity_condition(f, params, sub);
    if (conv.passed) {
      const ArgWindowReport star = check_membership(f, params, sub);
      rec.holds("implication observed" + params_id(params), star.passed, "no-violation-on-grid", star.status());
    }
  }
  return rec.take();
}

VerifyReport bounds_suite(std::uint64_t seed) {
  Recorder rec("bounds");
  Rng rng(seed + 3);
  std::vector<ClassParams> sample{make_params(1, 1), make_params(0.5, 0.5), make_params(0.3, 0.9)};
  for (int t = 0; t < 7; ++t) sample.push_back(random_params(rng));

  for (const ClassParams& params : sample) {
    const std::string id = params_id(params);
    const double limit = re_lower_validity_radius(params);

    bool upper_increasing = true;
    bool lower_decreasing = true;
    const int steps = 1000;
    for (int i = 1; i <= steps; ++i) {
      const double r0 = 0.999 * (i - 1) / steps;
      const double r1 = 0.999 * i / steps;
      upper_increasing = upper_increasing && re_upper_bound(params, r1) > re_upper_bound(params, r0);
      const double l0 = limit * (i - 1) / steps;
      const double l1 = limit * i / steps;
      lower_decreasing = lower_decreasing && re_lower_bound(params, l1) < re_lower_bound(params, l0);
    }
    rec.holds(id + "/re_upper strictly increasing", upper_increasing, "increasing", "not increasing");
    rec.holds(id + "/re_lower strictly decreasing", lower_decreasing, "decreasing", "not decreasing");
    rec.near(id + "/re_lower at validity radius", re_lower_bound(params, limit), 0.0, 0.0);
    rec.near(id + "/re_lower at 0", re_lower_bound(params, 0.0), 1.0, 0.0);
    rec.near(id + "/re_upper at 0", re_upper_bound(params, 0.0), 1.0, 0.0);

    for (double frac : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
      const double r = frac * limit;
      const RealPartExtrema ext = g_real_part_extrema(params, r, 10000);
      rec.holds(id + "/r=" + format_number(r) + "/Re G within bounds",
                ext.min_re >= re_lower_bound(params, r) - 1e-6 &&
                    ext.max_re <= re_upper_bound(params, r) + 1e-6,
                "[" + format_number(re_lower_bound(params, r)) + ", " +
                    format_number(re_upper_bound(params, r)) + "]",
                "[" + format_number(ext.min_re) + ", " + format_number(ext.max_re) + "]");
    }
    for (double r : {0.5, 0.8, 0.95}) {
      const RealPartExtrema ext = g_real_part_extrema(params, r, 10000);
      rec.holds(id + "/r=" + format_number(r) + "/max Re G below upper bound",
                ext.max_re <= re_upper_bound(params, r) + 1e-6, "<= " + format_number(re_upper_bound(params, r)),
                format_number(ext.max_re));
    }

    const double lambda1 = std::abs(lambda_coeffs(params, 1)[0]);
    double worst = 0.0;
    for (std::size_t n = 1; n <= 32; ++n) {
      worst = std::max(worst, std::abs(gamma_bound(params, n) * 2.0 * static_cast<double>(n) - lambda1));
    }
    rec.small(id + "/2n gamma_bound = |lambda_1|", worst, 1e-12);

    bool coeff_monotone = true;
    for (std::size_t n = 3; n <= 30; ++n) coeff_monotone = coeff_monotone && coeff_bound(params, n) >= coeff_bound(params, n - 1) * (1.0 - 1e-12);
    rec.holds(id + "/coeff_bound nondecreasing in n", coeff_monotone, "nondecreasing", "decreasing step");

    const ClassParams bigger1 = make_params(std::min(1.0, params.alpha1 + 0.05), params.alpha2);
    const ClassParams bigger2 = make_params(params.alpha1, std::min(1.0, params.alpha2 + 0.05));
    bool alpha_monotone = true;
    for (std::size_t n = 2; n <= 20; ++n) {
      alpha_monotone = alpha_monotone && coeff_bound(bigger1, n) >= coeff_bound(params, n) * (1.0 - 1e-15) &&
                       coeff_bound(bigger2, n) >= coeff_bound(params, n) * (1.0 - 1e-15);
    }
    rec.holds(id + "/coeff_bound nondecreasing in each alpha", alpha_monotone, "nondecreasing", "decreased");

    const GTildeOptions wide_sum{1e-10, 2048};
    bool ordered = true;
    std::string where;
    for (int i = 0; i <= 90; ++i) {
      const double r = 0.05 + 0.01 * i;
      const GrowthBounds g = growth_bounds(params, r, wide_sum);
      if (!(g.lower < g.upper)) {
        ordered = false;
        where = format_number(r);
      }
    }
    rec.holds(id + "/growth lower < upper on [0.05, 0.95]", ordered, "lower < upper", "fails at r=" + where);
  }
  return rec.take();
}

VerifyReport extremal_suite(std::uint64_t seed) {
  Recorder rec("extremal");
  Rng rng(seed + 4);

  for (double beta : {0.3, 0.5, 0.7, 1.0}) {
    const ClassParams params = make_params(beta, beta);
    const std::string id = "beta=" + format_number(beta);
    const auto gamma = log_coeffs(extremal_series(params, 33), 32);
    for (std::size_t n = 1; n <= 32; ++n) {
      rec.near(id + "/n=" + std::to_string(n) + "/|gamma_n(extremal)| = gamma_bound", std::abs(gamma[n - 1]),
               gamma_bound(params, n), 1e-10);
    }
  }

  for (int t = 0; t < 100; ++t) {
    const ClassParams params = random_params(rng);
    const auto gamma = log_coeffs(extremal_series(params, 33), 32);
    double excess = -INFINITY;
    for (std::size_t n = 1; n <= 32; ++n) excess = std::max(excess, std::abs(gamma[n - 1]) - gamma_bound(params, n));
    rec.small("domination" + params_id(params), excess, 1e-10);
  }

  const SampleGrid grid = default_grid();
  for (double beta : {0.3, 0.5, 0.7, 1.0}) {
    const ClassParams params = make_params(beta, beta);
    const std::string id = "beta=" + format_number(beta);
    const ArgWindowReport ext = check_membership(extremal_evaluator(params), params, grid);
    rec.holds(id + "/extremal membership", ext.passed, "no-violation-on-grid",
              ext.status() + " (" + std::to_string(ext.violations.size()) + " violations)");
    const ArgWindowReport kb = check_membership(koebe_beta_evaluator(beta), params, grid);
    rec.holds(id + "/koebe_beta membership", kb.passed, "no-violation-on-grid",
              kb.status() + " (" + std::to_string(kb.violations.size()) + " violations, max |arg| " +
                  format_number(std::max(-kb.min_arg, kb.max_arg)) + ")");
  }

  for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
    const ClassParams params = make_params(beta, beta);
    const NormalizedFunction f = koebe_beta_series(beta, 20);
    const std::string id = "beta=" + format_number(beta);
    double excess = -INFINITY;
    for (std::size_t n = 2; n <= 20; ++n) {
      excess = std::max(excess, std::abs(f.series()[n]) - coeff_bound(params, n) * (1.0 + 1e-12));
    }
    rec.small(id + "/|a_n(koebe_beta)| <= coeff_bound", excess, 0.0);
    rec.near(id + "/a_2 attains coeff_bound", std::abs(f.series()[2]), coeff_bound(params, 2), 1e-12);
  }

  for (int t = 0; t < 20; ++t) {
    const ClassParams params = random_params(rng);
    const NormalizedFunction f = extremal_series(params, 33);
    rec.small("ratio_series(extremal) = G" + params_id(params),
              max_coeff_distance(ratio_series(f.series()), g_series(params, 32)), 1e-9);
  }
  return rec.take();
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"series", "generator", "membership", "bounds", "extremal"};
  return names;
}

VerifyReport run_suite(std::string_view name, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  if (name == "series") {
    report = series_suite(seed);
  } else if (name == "generator") {
    report = generator_suite(seed);
  } else if (name == "membership") {
    report = membership_suite(seed);
  } else if (name == "bounds") {
    report = bounds_suite(seed);
  } else if (name == "extremal") {
    report = extremal_suite(seed);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerifyReport> run_suites(const std::vector<std::string>& names, std::uint64_t seed) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") {
      expanded.insert(expanded.end(), known_suites().begin(), known_suites().end());
    } else if (std::find(known_suites().begin(), known_suites().end(), n) != known_suites().end()) {
      expanded.push_back(n);
    } else {
      throw std::invalid_argument("unknown suite '" + n + "'");
    }
  }
  std::vector<VerifyReport> out;
  for (const auto& n : expanded) out.push_back(run_suite(n, seed));
  return out;
}

nlohmann::json verify_to_json(const std::vector<VerifyReport>& reports, bool include_timing) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
      failures.push_back({{"case", f.case_id}, {"expected", f.expected}, {"observed", f.observed},
                          {"tolerance", f.tolerance}});
    }
    nlohmann::json j{{"suite", r.suite}, {"cases", r.cases_run}, {"passed", r.passed()},
                        {"checks", r.checks},   {"failures", failures}};
    if (include_timing) j["wall_seconds"] = r.wall_seconds;
    arr.push_back(std::move(j));
    all = all && r.passed();
  }
  return {{"passed", all}, {"suites", arr}};
}

}  // namespace sstar
