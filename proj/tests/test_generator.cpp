#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sstar/errors.hpp"
#include "sstar/generator.hpp"

using namespace sstar;
using std::numbers::pi;

namespace {

// Plain double sum of C(n-1, k-1) C(p, k) (1+c)^k; fine for small n.
cplx naive_lambda(const ClassParams& p, std::size_t n) {
  cplx sum = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double binom_n = 1.0;
    for (std::size_t j = 0; j < k - 1; ++j) binom_n = binom_n * double(n - 1 - j) / double(j + 1);
    double binom_p = 1.0;
    for (std::size_t j = 0; j < k; ++j) binom_p = binom_p * (p.p - double(j)) / double(j + 1);
    sum += binom_n * binom_p * std::pow(1.0 + p.c, double(k));
  }
  return sum;
}

}  // namespace

TEST_CASE("make_params") {
  const auto a = make_params(1, 1);
  CHECK(a.theta == 0.0);
  CHECK(a.c == cplx(1.0));
  CHECK(a.p == 1.0);

  const auto b = make_params(0.5, 0.5);
  CHECK(b.c == cplx(1.0));
  CHECK(b.p == 0.5);

  const auto m = make_params(0.5, 1);
  CHECK(m.theta == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(m.c - std::polar(1.0, pi / 3.0)) < 1e-15);
  CHECK(m.p == 0.75);
  CHECK(std::abs(std::abs(m.c) - 1.0) < 1e-14);
  CHECK(m.half_angle_cos() == doctest::Approx(std::cos(pi / 6.0)).epsilon(1e-14));
  CHECK(m.lambda1_abs() == doctest::Approx(1.5 * std::cos(pi / 6.0)).epsilon(1e-14));

  CHECK_THROWS_AS(make_params(0, 1), ParamOutOfRange);
  CHECK_THROWS_AS(make_params(1, 1.0000001), ParamOutOfRange);
  CHECK_THROWS_AS(make_params(NAN, 0.5), ParamOutOfRange);
  CHECK_THROWS_AS(make_params(-0.2, 0.5), ParamOutOfRange);
}

TEST_CASE("lambda_coeffs: symmetric Koebe case is 2 everywhere") {
  const auto l = lambda_coeffs(make_params(1, 1), 64);
  REQUIRE(l.size() == 64);
  for (std::size_t n = 0; n < 64; ++n) {
    CAPTURE(n);
    CHECK(std::abs(l[n] - 2.0) < 1e-10);
  }
}

TEST_CASE("lambda_coeffs: first coefficient and reality") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int t = 0; t < 20; ++t) {
    const auto p = make_params(u(rng), u(rng));
    const auto l = lambda_coeffs(p, 12);
    CHECK(std::abs(l[0] - (1.0 + p.c) * p.p) < 1e-14);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(std::abs(l[n - 1] - naive_lambda(p, n)) < 1e-9);
  }
  const auto sym = lambda_coeffs(make_params(0.3, 0.3), 40);
  for (const auto& v : sym) CHECK(v.imag() == 0.0);
}

TEST_CASE("lambda_via_2f1") {
  const auto p = make_params(0.5, 1);
  CHECK(std::abs(lambda_via_2f1(p, 1) - (1.0 + p.c) * p.p) < 1e-15);
  CHECK(std::abs(lambda_via_2f1(make_params(1, 1), 5) - 2.0) < 1e-12);
  const auto l = lambda_coeffs(p, 40);
  CHECK(std::abs(lambda_via_2f1(p, 3) - l[2]) / std::abs(l[2]) < 1e-10);
  for (std::size_t n = 1; n <= 40; ++n) CHECK(std::abs(lambda_via_2f1(p, n) - l[n - 1]) < 1e-12);
}

TEST_CASE("hyp2f1_terminating") {
  // 2F1(-m, b; b; x) = (1 - x)^m
  CHECK(std::abs(hyp2f1_terminating(4, 0.7, 0.7, cplx(0.3, 0.1)) - std::pow(cplx(0.7, -0.1), 4)) < 1e-14);
  CHECK(hyp2f1_terminating(0, 2.0, 3.0, 5.0) == cplx(1.0));
  // 2F1(-2, b; c; x) = 1 - 2bx/c + b(b+1)x^2/(c(c+1))
  const double b = 0.4, c = 2.0;
  const cplx x(1.2, 0.5);
  CHECK(std::abs(hyp2f1_terminating(2, b, c, x) - (1.0 - 2.0 * b * x / c + b * (b + 1) * x * x / (c * (c + 1)))) <
        1e-14);
}

TEST_CASE("g_series") {
  CHECK(g_series(make_params(0.4, 0.9), 0).order() == 0);
  CHECK(g_series(make_params(0.4, 0.9), 0)[0] == cplx(1.0));
  const auto k = g_series(make_params(1, 1), 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(std::abs(k[n] - (n == 0 ? 1.0 : 2.0)) < 1e-15);

  // independent route: pow of the Moebius series
  for (auto [a1, a2] : {std::pair{0.3, 0.8}, std::pair{1.0, 0.2}, std::pair{0.6, 0.6}}) {
    const auto p = make_params(a1, a2);
    std::vector<cplx> num(65), den(65);
    num[0] = den[0] = 1.0;
    num[1] = p.c;
    den[1] = -1.0;
    const auto mob = TruncatedSeries(num) * reciprocal(TruncatedSeries(den));
    const auto via_pow = pow_series(mob, p.p);
    const auto g = g_series(p, 64);
    CHECK(max_coeff_distance(g, via_pow) < 1e-10);
    CHECK(std::abs(g[1] - lambda_via_2f1(p, 1)) < 1e-14);
  }
}

TEST_CASE("g_eval and derivative") {
  const auto k = make_params(1, 1);
  CHECK(g_eval(k, 0.0) == cplx(1.0));
  CHECK(std::abs(g_eval(k, 0.5) - 3.0) < 1e-15);
  CHECK_THROWS_AS(g_eval(k, cplx(0.6, 0.8)), OutsideDisc);
  CHECK_THROWS_AS(g_eval(k, 1.5), OutsideDisc);

  const auto p = make_params(0.35, 0.9);
  const auto s = g_series(p, 64);
  for (double r : {0.2, 0.5, 0.7}) {
    for (int j = 0; j < 12; ++j) {
      const cplx z = std::polar(r, 2 * pi * j / 12.0);
      CHECK(std::abs(g_eval(p, z) - eval_at(s, z).value) < 1e-8);
      const double h = 1e-6;
      const cplx fd = (g_eval(p, z + h) - g_eval(p, z - h)) / (2 * h);
      CHECK(std::abs(g_prime_eval(p, z) - fd) < 1e-7);
    }
  }
}

TEST_CASE("g_tilde_series") {
  const auto t = g_tilde_series(make_params(1, 1), 10);
  CHECK(t[0] == cplx(0.0));
  for (std::size_t n = 1; n <= 10; ++n) CHECK(std::abs(t[n] - 2.0 / double(n)) < 1e-14);
  const auto p = make_params(0.2, 0.7);
  const auto l = lambda_coeffs(p, 30);
  const auto tp = g_tilde_series(p, 30);
  for (std::size_t n = 1; n <= 30; ++n) CHECK(std::abs(tp[n] * double(n) - l[n - 1]) < 1e-12);
  CHECK(max_coeff_distance(tp, integrate_dz_over_z(g_series(p, 30) - TruncatedSeries::constant(1.0, 30))) < 1e-14);
  CHECK_THROWS(g_tilde_series(p, 0));
}

TEST_CASE("g_tilde_eval_real") {
  const auto k = make_params(1, 1);
  CHECK(g_tilde_eval_real(k, 0.0) == cplx(0.0));
  CHECK(std::abs(g_tilde_eval_real(k, 0.5) - (-2.0 * std::log(0.5))) < 1e-9);
  CHECK(std::abs(g_tilde_eval_real(k, -0.5) - (-2.0 * std::log(1.5))) < 1e-9);
  CHECK_THROWS_AS(g_tilde_eval_real(k, 0.999), TailNotConverged);
  CHECK_THROWS_AS(g_tilde_eval_real(k, 1.0), OutsideDisc);
  GTildeOptions wide;
  wide.max_order = 4096;
  CHECK(std::abs(g_tilde_eval_real(k, 0.95, wide) - (-2.0 * std::log(0.05))) < 1e-9);
}

TEST_CASE("g_tilde_eval at complex points matches the series and the real path") {
  const auto k = make_params(1, 1);
  const cplx z(0.3, 0.6);
  CHECK(std::abs(g_tilde_eval(k, z) + 2.0 * std::log(1.0 - z)) < 1e-12);
  CHECK(std::abs(g_tilde_eval(k, std::polar(0.99, 0.4)) + 2.0 * std::log(1.0 - std::polar(0.99, 0.4))) < 1e-11);
  const auto p = make_params(0.45, 0.8);
  const auto s = g_tilde_series(p, 128);
  for (int j = 0; j < 8; ++j) {
    const cplx w = std::polar(0.6, 2 * pi * j / 8.0);
    CHECK(std::abs(g_tilde_eval(p, w) - eval_at(s, w).value) < 1e-12);
  }
  CHECK(std::abs(g_tilde_eval(p, 0.4) - g_tilde_eval_real(p, 0.4)) < 1e-10);
}

TEST_CASE("omega_contains") {
  for (auto [a1, a2] : {std::pair{1.0, 1.0}, std::pair{0.2, 0.9}, std::pair{0.5, 0.5}}) {
    const auto p = make_params(a1, a2);
    CHECK(omega_contains(p, 1.0));
    CHECK_FALSE(omega_contains(p, -1.0));
    CHECK_THROWS_AS(omega_contains(p, 0.0), ZeroArgument);
  }
  const auto k = make_params(1, 1);
  CHECK_FALSE(omega_contains(k, cplx(0.0, 1.0)));
  CHECK(omega_contains(k, cplx(0.0, 1.0), 1e-9));
  const auto p = make_params(0.2, 0.9);
  CHECK(omega_contains(p, std::polar(1.0, 0.44 * pi)));
  CHECK_FALSE(omega_contains(p, std::polar(1.0, -0.11 * pi)));
  CHECK(omega_contains(p, std::polar(1.0, -0.09 * pi)));
}

TEST_CASE("image of the disc lies in Omega; swap symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int t = 0; t < 10; ++t) {
    const double a1 = u(rng), a2 = u(rng);
    const auto p = make_params(a1, a2);
    const auto q = make_params(a2, a1);
    CHECK(std::abs(q.c - std::conj(p.c)) < 1e-15);
    const auto lp = lambda_coeffs(p, 20), lq = lambda_coeffs(q, 20);
    for (std::size_t n = 0; n < 20; ++n) CHECK(std::abs(lq[n] - std::conj(lp[n])) < 1e-12);
    for (double r : {0.3, 0.9, 0.999}) {
      for (int j = 0; j < 64; ++j) CHECK(omega_contains(p, g_eval(p, std::polar(r, 2 * pi * j / 64.0))));
    }
  }
}

TEST_CASE("real-part extrema: parallel equals serial") {
  const auto p = make_params(0.3, 0.9);
  const auto a = g_real_part_extrema(p, 0.6, 10000);
  const auto b = g_real_part_extrema_serial(p, 0.6, 10000);
  CHECK(a.min_re == b.min_re);
  CHECK(a.max_re == b.max_re);
  const auto k = g_real_part_extrema(make_params(1, 1), 0.5, 1000);
  CHECK(k.min_re == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(k.max_re == doctest::Approx(3.0).epsilon(1e-12));
}
