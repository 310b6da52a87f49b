#include <doctest.h>

#include <cmath>
#include <random>

#include "sstar/errors.hpp"
#include "sstar/series.hpp"
#include "sstar/series_json.hpp"

using namespace sstar;

namespace {

TruncatedSeries poly(std::initializer_list<cplx> c) { return TruncatedSeries(std::vector<cplx>(c)); }

void require_coeffs(const TruncatedSeries& s, const std::vector<cplx>& expected, double tol) {
  REQUIRE(s.order() + 1 == expected.size());
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CAPTURE(n);
    CHECK(std::abs(s[n] - expected[n]) <= tol);
  }
}

// 1 + z + ... with c0 = 1 and small random tail, independent of the library
TruncatedSeries random_unit_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(order + 1);
  c[0] = 1.0;
  for (std::size_t n = 1; n <= order; ++n) c[n] = cplx(u(rng), u(rng)) * std::pow(0.5, n);
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("construction enforces the invariants") {
  CHECK_THROWS_AS(TruncatedSeries(std::vector<cplx>{}), std::invalid_argument);
  CHECK_THROWS_AS(poly({1.0, cplx(NAN, 0.0)}), NonFiniteCoefficient);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<cplx>(300)), OrderTooLarge);
  CHECK(TruncatedSeries(std::vector<cplx>(300), 512).order() == 299);
}

TEST_CASE("arith truncates to the smaller order") {
  const auto a = poly({1.0, 1.0});
  require_coeffs(arith(a, poly({1.0, 1.0, 0.0}), ArithOp::mul), {1.0, 2.0}, 0.0);
  require_coeffs(poly({1.0, 1.0, 0.0}) * poly({1.0, 1.0, 0.0}), {1.0, 2.0, 1.0}, 0.0);
  const auto s = poly({1.0, 2.0, cplx(3.0, -1.0)});
  require_coeffs(s + TruncatedSeries::zero(2), {1.0, 2.0, cplx(3.0, -1.0)}, 0.0);
  require_coeffs(arith(s, s, ArithOp::sub), {0.0, 0.0, 0.0}, 0.0);

  // geometric series times (1 - z) telescopes
  std::vector<cplx> one_minus_z(9);
  one_minus_z[0] = 1.0;
  one_minus_z[1] = -1.0;
  std::vector<cplx> one(9);
  one[0] = 1.0;
  require_coeffs(TruncatedSeries::geometric(8) * TruncatedSeries(one_minus_z), one, 0.0);
}

TEST_CASE("reciprocal") {
  require_coeffs(reciprocal(poly({1.0, -1.0, 0.0, 0.0, 0.0})), {1.0, 1.0, 1.0, 1.0, 1.0}, 0.0);
  require_coeffs(reciprocal(poly({1.0})), {1.0}, 0.0);
  CHECK_THROWS_AS(reciprocal(poly({1e-13, 1.0})), NearZeroConstantTerm);
  CHECK_NOTHROW(reciprocal(poly({1e-13, 1.0}), 1e-14));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const auto s = random_unit_series(rng, 32);
    CHECK(max_coeff_distance(reciprocal(reciprocal(s)), s) < 1e-12);
    CHECK(max_coeff_distance(divide(s, s), TruncatedSeries::constant(1.0, 32)) < 1e-12);
  }
}

TEST_CASE("log_series") {
  require_coeffs(log_series(poly({1.0, 1.0, 0.0, 0.0})), {0.0, 1.0, -0.5, 1.0 / 3.0}, 1e-15);
  require_coeffs(log_series(poly({1.0, 0.0})), {0.0, 0.0}, 0.0);
  CHECK_THROWS_AS(log_series(poly({2.0, 1.0})), ConstantTermNotOne);
  CHECK_THROWS_AS(log_series(poly({1.0 + 1e-9, 1.0})), ConstantTermNotOne);

  // 1/(1-z)^2 = sum (n+1) z^n; its log is -2 log(1-z) = sum 2 z^n / n
  std::vector<cplx> sq(7), expected(7);
  for (std::size_t n = 0; n <= 6; ++n) sq[n] = static_cast<double>(n + 1);
  for (std::size_t n = 1; n <= 6; ++n) expected[n] = 2.0 / static_cast<double>(n);
  require_coeffs(log_series(TruncatedSeries(sq)), expected, 1e-14);
}

TEST_CASE("exp_series") {
  require_coeffs(exp_series(poly({0.0, 1.0, 0.0, 0.0, 0.0})), {1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0}, 1e-16);
  require_coeffs(exp_series(poly({0.0})), {1.0}, 0.0);
  CHECK_THROWS_AS(exp_series(poly({0.5, 1.0})), ConstantTermNotZero);

  std::vector<cplx> neg2log(9), expected(9);
  for (std::size_t n = 1; n <= 8; ++n) neg2log[n] = 2.0 / static_cast<double>(n);
  for (std::size_t n = 0; n <= 8; ++n) expected[n] = static_cast<double>(n + 1);
  require_coeffs(exp_series(TruncatedSeries(neg2log)), expected, 1e-13);
}

TEST_CASE("pow_series") {
  require_coeffs(pow_series(poly({1.0, -1.0, 0.0, 0.0, 0.0, 0.0}), -1.0), {1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 1e-15);
  const auto a = poly({1.0, cplx(0.3, 0.1), -0.2, 0.05});
  CHECK(max_coeff_distance(pow_series(a, 1.0), a) < 1e-15);
  CHECK_THROWS_AS(pow_series(poly({0.5, 1.0}), 0.5), ConstantTermNotOne);

  // generalized binomial: (1-z)^{-2b} has coefficients prod_{j<n} (2b + j) / n!
  const double beta = 0.7;
  std::vector<cplx> base(11);
  base[0] = 1.0;
  base[1] = -1.0;
  const auto p = pow_series(TruncatedSeries(base), -2.0 * beta);
  double coeff = 1.0;
  for (std::size_t n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(std::abs(p[n] - coeff) < 1e-13);
    coeff *= (2.0 * beta + static_cast<double>(n)) / static_cast<double>(n + 1);
  }
}

TEST_CASE("derivative and integrate_dz_over_z") {
  require_coeffs(derivative(poly({0.0, 1.0, 2.0})), {1.0, 4.0}, 0.0);
  require_coeffs(derivative(poly({5.0})), {0.0}, 0.0);

  // 2z/(1-z) integrates termwise to -2 log(1-z)
  std::vector<cplx> two_z(6);
  for (std::size_t n = 1; n <= 5; ++n) two_z[n] = 2.0;
  require_coeffs(integrate_dz_over_z(TruncatedSeries(two_z)), {0.0, 2.0, 1.0, 2.0 / 3.0, 0.5, 0.4}, 1e-15);
  require_coeffs(integrate_dz_over_z(poly({0.0, 1.0})), {0.0, 1.0}, 0.0);
  require_coeffs(integrate_dz_over_z(poly({0.0})), {0.0}, 0.0);
  CHECK_THROWS_AS(integrate_dz_over_z(poly({1.0, 1.0})), ConstantTermNotZero);

  // d/dz of the integral is a(z)/z termwise: coefficient n-1 equals a_n
  const auto a = poly({0.0, 3.0, cplx(1.0, 2.0), -4.0, 0.25});
  const auto d = derivative(integrate_dz_over_z(a));
  for (std::size_t n = 1; n <= 4; ++n) CHECK(std::abs(d[n - 1] - a[n]) < 1e-15);
}

TEST_CASE("hadamard") {
  require_coeffs(hadamard(poly({1.0, 2.0, 3.0}), poly({1.0, 1.0, 1.0})), {1.0, 2.0, 3.0}, 0.0);
  require_coeffs(hadamard(poly({1.0, 2.0, 3.0}), TruncatedSeries::zero(2)), {0.0, 0.0, 0.0}, 0.0);
}

TEST_CASE("compose") {
  require_coeffs(compose(poly({1.0, 1.0, 0.0}), poly({0.0, 0.0, 1.0})), {1.0, 0.0, 1.0}, 0.0);
  const auto a = poly({1.0, cplx(0.5, 0.5), -2.0, 3.0});
  CHECK(max_coeff_distance(compose(a, TruncatedSeries::identity(3)), a) == 0.0);
  CHECK_THROWS_AS(compose(a, poly({0.1, 1.0, 0.0, 0.0})), InnerConstantNonzero);

  // exp(log(1 + z)) = 1 + z
  std::vector<cplx> e(17), one_plus_z(17);
  double fact = 1.0;
  for (std::size_t n = 0; n <= 16; ++n) {
    e[n] = 1.0 / fact;
    fact *= static_cast<double>(n + 1);
  }
  one_plus_z[0] = 1.0;
  one_plus_z[1] = 1.0;
  const auto back = compose(TruncatedSeries(e), log_series(TruncatedSeries(one_plus_z)));
  CHECK(max_coeff_distance(back, TruncatedSeries(one_plus_z)) < 1e-12);
}

TEST_CASE("eval_at") {
  CHECK(eval_at(poly({1.0, 1.0, 1.0}), 0.0).value == cplx(1.0));
  const auto geo = TruncatedSeries::geometric(40);
  const SeriesValue v = eval_at(geo, 0.5);
  CHECK(std::abs(v.value - 2.0) < 1e-9);
  CHECK(v.tail_estimate == doctest::Approx(std::pow(0.5, 40) / 0.5));
  CHECK_THROWS_AS(eval_at(geo, 1.0), OutsideDisc);
  CHECK_THROWS_AS(eval_at(geo, cplx(0.8, 0.7)), OutsideDisc);

  const auto real_coeffs = poly({0.5, -1.0, 2.0, 0.25});
  const cplx z(0.3, -0.4);
  CHECK(std::abs(eval_at(real_coeffs, std::conj(z)).value - std::conj(eval_at(real_coeffs, z).value)) < 1e-15);
}

TEST_CASE("round trips hold on random well-conditioned input") {
  std::mt19937_64 rng(11);
  for (std::size_t order : {8, 32, 64}) {
    const auto b = random_unit_series(rng, order);
    CHECK(max_coeff_distance(exp_series(log_series(b)), b) < 1e-10);
    CHECK(max_coeff_distance(pow_series(b, 0.37) * pow_series(b, -0.37), TruncatedSeries::constant(1.0, order)) <
          1e-10);
  }
}

TEST_CASE("series JSON format") {
  const auto s = poly({cplx(1.0, -2.0), 0.5, cplx(0.0, 3.0)});
  const auto j = series_to_json(s);
  CHECK(j.dump() == "[[1.0,-2.0],[0.5,0.0],[0.0,3.0]]");
  CHECK(max_coeff_distance(series_from_json(j), s) == 0.0);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse("[1, 2]")), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse("[]")), std::invalid_argument);
  CHECK_THROWS_AS(read_series_file("/nonexistent/file.json"), std::runtime_error);
}
