#include "sstar/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sstar/errors.hpp"

namespace sstar {

namespace {

// 3^256 ~ 1e122 bounds the largest term of either lambda sum at the default
// order cap; 200 digits leave ample headroom for the cancellation.
using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>,
                                           boost::multiprecision::et_off>;

struct WideComplex {
  Wide re;
  Wide im;

  WideComplex() = default;
  WideComplex(Wide r, Wide i) : re(std::move(r)), im(std::move(i)) {}

  WideComplex operator+(const WideComplex& o) const { return {re + o.re, im + o.im}; }
  WideComplex operator*(const WideComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  WideComplex operator*(const Wide& s) const { return {re * s, im * s}; }
  cplx to_double() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

// 1 + c with c = exp(i pi theta), computed directly in wide precision.
// Wide trig dominates a single lambda_via_2f1 call; callers sweep n at fixed
// theta, so one cached entry per thread is enough.
WideComplex one_plus_c_wide(double theta) {
  thread_local double cached_theta = std::numeric_limits<double>::quiet_NaN();
  thread_local WideComplex cached{Wide(2), Wide(0)};
  if (theta != cached_theta) {
    const Wide angle = boost::math::constants::pi<Wide>() * Wide(theta);
    cached = {Wide(1) + cos(angle), sin(angle)};
    cached_theta = theta;
  }
  return cached;
}

}  // namespace

double ClassParams::half_angle_cos() const { return std::cos(std::numbers::pi * theta / 2.0); }

double ClassParams::lambda1_abs() const { return (alpha1 + alpha2) * half_angle_cos(); }

ClassParams make_params(double alpha1, double alpha2) {
  auto in_range = [](double a) { return std::isfinite(a) && a > 0.0 && a <= 1.0; };
  if (!in_range(alpha1) || !in_range(alpha2)) {
    throw ParamOutOfRange("alpha1 = " + std::to_string(alpha1) + ", alpha2 = " +
                          std::to_string(alpha2) + " (both must lie in (0, 1])");
  }
  ClassParams p;
  p.alpha1 = alpha1;
  p.alpha2 = alpha2;
  p.theta = (alpha2 - alpha1) / (alpha2 + alpha1);
  p.c = std::polar(1.0, std::numbers::pi * p.theta);
  if (alpha1 == alpha2) p.c = 1.0;
  p.p = (alpha1 + alpha2) / 2.0;
  return p;
}

std::vector<cplx> lambda_coeffs(const ClassParams& params, std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("lambda_coeffs: n_max must be >= 1");
  const Wide p(params.p);
  const WideComplex base = one_plus_c_wide(params.theta);

  // C(p, k) = prod_{j<k} (p - j) / k!  and  (1 + c)^k, for k = 1..n_max
  std::vector<Wide> binom_p(n_max + 1);
  std::vector<WideComplex> base_pow(n_max + 1);
  binom_p[0] = 1;
  base_pow[0] = {Wide(1), Wide(0)};
  for (std::size_t k = 1; k <= n_max; ++k) {
    binom_p[k] = binom_p[k - 1] * (p - Wide(k - 1)) / Wide(k);
    base_pow[k] = base_pow[k - 1] * base;
  }

  std::vector<cplx> out(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    WideComplex sum{Wide(0), Wide(0)};
    Wide binom_n(1);  // C(n-1, k-1)
    for (std::size_t k = 1; k <= n; ++k) {
      sum = sum + base_pow[k] * (binom_n * binom_p[k]);
      binom_n = binom_n * Wide(n - k) / Wide(k);
    }
    out[n - 1] = sum.to_double();
  }
  return out;
}

namespace {

WideComplex hyp2f1_wide(std::size_t m, const Wide& b, const Wide& c, const WideComplex& x) {
  const Wide mw(static_cast<double>(m));
  WideComplex term{Wide(1), Wide(0)};
  WideComplex sum = term;
  for (std::size_t k = 0; k < m; ++k) {
    const Wide kw(static_cast<double>(k));
    const Wide ratio = (kw - mw) * (b + kw) / ((c + kw) * (kw + 1));
    term = term * x * ratio;
    sum = sum + term;
  }
  return sum;
}

}  // namespace

cplx hyp2f1_terminating(std::size_t m, double b, double c, cplx x) {
  return hyp2f1_wide(m, Wide(b), Wide(c), WideComplex{Wide(x.real()), Wide(x.imag())}).to_double();
}

cplx lambda_via_2f1(const ClassParams& params, std::size_t n) {
  if (n < 1) throw std::invalid_argument("lambda_via_2f1: n must be >= 1");
  const Wide p(params.p);
  const WideComplex base = one_plus_c_wide(params.theta);
  const WideComplex f = hyp2f1_wide(n - 1, Wide(1) - p, Wide(2), base);
  return (base * f * p).to_double();
}

TruncatedSeries g_series(const ClassParams& params, std::size_t order) {
  const cplx c = params.c;
  const double p = params.p;
  std::vector<cplx> g(order + 1);
  g[0] = 1.0;
  if (order >= 1) g[1] = p * (1.0 + c);
  for (std::size_t n = 1; n + 1 <= order; ++n) {
    const double nd = static_cast<double>(n);
    g[n + 1] = ((p * (1.0 + c) - (c - 1.0) * nd) * g[n] + c * (nd - 1.0) * g[n - 1]) / (nd + 1.0);
  }
  return TruncatedSeries(std::move(g), std::max(order, kDefaultMaxOrder));
}

cplx g_eval(const ClassParams& params, cplx z) {
  if (!(std::abs(z) < 1.0)) throw OutsideDisc("g_eval at |z| = " + std::to_string(std::abs(z)));
  const cplx mobius = (1.0 + params.c * z) / (1.0 - z);
  return std::exp(params.p * std::log(mobius));
}

cplx g_prime_eval(const ClassParams& params, cplx z) {
  const cplx g = g_eval(params, z);
  return params.p * (1.0 + params.c) * g / ((1.0 + params.c * z) * (1.0 - z));
}

TruncatedSeries g_tilde_series(const ClassParams& params, std::size_t order) {
  if (order < 1) throw std::invalid_argument("g_tilde_series: order must be >= 1");
  const TruncatedSeries g = g_series(params, order);
  return integrate_dz_over_z(g - TruncatedSeries::constant(1.0, order));
}

cplx g_tilde_eval_real(const ClassParams& params, double r, const GTildeOptions& opts) {
  const double ar = std::abs(r);
  if (!(ar < 1.0)) throw OutsideDisc("g_tilde_eval_real at |r| = " + std::to_string(ar));
  if (r == 0.0) return 0.0;

  const TruncatedSeries g = g_series(params, opts.max_order);
  const auto lambda = g.coeffs();
  double lambda_max = 0.0;
  for (std::size_t n = 1; n < lambda.size(); ++n) lambda_max = std::max(lambda_max, std::abs(lambda[n]));
  const bool dominated = lambda_max <= 2.0 + 1e-12;

  cplx sum = 0.0;
  double rn = 1.0;
  double tail = 0.0;
  for (std::size_t n = 1; n <= opts.max_order; ++n) {
    rn *= r;
    const cplx term = lambda[n] * rn / static_cast<double>(n);
    sum += term;
    const double next = static_cast<double>(n + 1);
    if (dominated) {
      tail = 2.0 * std::pow(ar, next) / (next * (1.0 - ar));
    } else {
      // ratio-test estimate from the last term
      tail = std::abs(term) * ar / (1.0 - ar);
    }
    if (tail < opts.tolerance) return sum;
  }
  throw TailNotConverged("r = " + std::to_string(r) + ", tail estimate " + std::to_string(tail) +
                         " after " + std::to_string(opts.max_order) + " terms");
}

cplx g_tilde_eval(const ClassParams& params, cplx z) {
  const double az = std::abs(z);
  if (!(az < 1.0)) throw OutsideDisc("g_tilde_eval at |z| = " + std::to_string(az));
  if (az == 0.0) return 0.0;

  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();
  auto integrand = [&](double s) { return (g_eval(params, s * z) - 1.0) / s; };
  auto panel = [&](double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double x = nodes[i];
      if (x == 0.0) {
        acc += weights[i] * integrand(mid);
      } else {
        acc += weights[i] * (integrand(mid - half * x) + integrand(mid + half * x));
      }
    }
    return acc * half;
  };

  // Panels halve toward s = 1 until shorter than the distance from the
  // endpoint to the nearest singularity of G(sz), at s = 1/|z|.
  const double gap = 1.0 / az - 1.0;
  cplx total = 0.0;
  double a = 0.0;
  double len = 0.5;
  while (len > gap && len > 1e-15) {
    total += panel(a, a + len);
    a += len;
    len *= 0.5;
  }
  total += panel(a, 1.0);
  return total;
}

bool omega_contains(const ClassParams& params, cplx w, double slack) {
  if (w == cplx(0.0)) throw ZeroArgument("omega_contains: w = 0 has no argument");
  const double arg = std::arg(w);
  const double lo = -std::numbers::pi * params.alpha1 / 2.0 - slack;
  const double hi = std::numbers::pi * params.alpha2 / 2.0 + slack;
  return lo < arg && arg < hi;
}

RealPartExtrema g_real_part_extrema(const ClassParams& params, double r, std::size_t n_angles) {
  if (n_angles == 0) throw std::invalid_argument("g_real_part_extrema: n_angles must be > 0");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n_angles);
  const auto count = static_cast<long long>(n_angles);
  double lo = INFINITY;
  double hi = -INFINITY;
#pragma omp parallel for schedule(static) reduction(min : lo) reduction(max : hi)
  for (long long j = 0; j < count; ++j) {
    const double re = g_eval(params, std::polar(r, step * static_cast<double>(j))).real();
    lo = std::min(lo, re);
    hi = std::max(hi, re);
  }
  return {lo, hi};
}

RealPartExtrema g_real_part_extrema_serial(const ClassParams& params, double r,
                                           std::size_t n_angles) {
  if (n_angles == 0) throw std::invalid_argument("g_real_part_extrema: n_angles must be > 0");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n_angles);
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t j = 0; j < n_angles; ++j) {
    const double re = g_eval(params, std::polar(r, step * static_cast<double>(j))).real();
    lo = std::min(lo, re);
    hi = std::max(hi, re);
  }
  return {lo, hi};
}

}  // namespace sstar
