#include "sstar/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sstar/errors.hpp"

namespace sstar {

namespace {

bool is_finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

void require_constant_one(const TruncatedSeries& a, const char* op) {
  if (std::abs(a[0] - cplx(1.0)) > kConstantTermTol) {
    throw ConstantTermNotOne(std::string(op) + ": c0 = (" + std::to_string(a[0].real()) + ", " +
                             std::to_string(a[0].imag()) + ")");
  }
}

void require_constant_zero(const TruncatedSeries& a, const char* op) {
  if (std::abs(a[0]) > kConstantTermTol) {
    throw ConstantTermNotZero(std::string(op) + ": |c0| = " + std::to_string(std::abs(a[0])));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs, std::size_t max_order)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries needs at least c0");
  if (coeffs_.size() - 1 > max_order) {
    throw OrderTooLarge("order " + std::to_string(coeffs_.size() - 1) + " exceeds cap " +
                        std::to_string(max_order));
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!is_finite(coeffs_[n])) throw NonFiniteCoefficient("at degree " + std::to_string(n));
  }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<cplx>(order + 1), std::max(order, kDefaultMaxOrder));
}

TruncatedSeries TruncatedSeries::constant(cplx value, std::size_t order) {
  std::vector<cplx> c(order + 1);
  c[0] = value;
  return TruncatedSeries(std::move(c), std::max(order, kDefaultMaxOrder));
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
  std::vector<cplx> c(order + 1);
  c[1] = 1.0;
  return TruncatedSeries(std::move(c), std::max(order, kDefaultMaxOrder));
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order) {
  return TruncatedSeries(std::vector<cplx>(order + 1, cplx(1.0)), std::max(order, kDefaultMaxOrder));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("truncated: cannot extend a series");
  return TruncatedSeries(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + order + 1),
                         std::max(order, kDefaultMaxOrder));
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t k) const {
  std::vector<cplx> c(coeffs_.size());
  for (std::size_t n = k; n < c.size(); ++n) c[n] = coeffs_[n - k];
  return TruncatedSeries(std::move(c), std::max(order(), kDefaultMaxOrder));
}

TruncatedSeries TruncatedSeries::shifted_down(std::size_t k) const {
  if (k > order()) throw std::invalid_argument("shifted_down: shift exceeds order");
  for (std::size_t n = 0; n < k; ++n) {
    if (std::abs(coeffs_[n]) > kConstantTermTol) {
      throw std::invalid_argument("shifted_down: nonzero coefficient at degree " + std::to_string(n));
    }
  }
  return TruncatedSeries(std::vector<cplx>(coeffs_.begin() + k, coeffs_.end()),
                         std::max(order(), kDefaultMaxOrder));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<cplx> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return TruncatedSeries(std::move(c), std::max(n, kDefaultMaxOrder));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<cplx> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return TruncatedSeries(std::move(c), std::max(n, kDefaultMaxOrder));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<cplx> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k <= i; ++k) acc += ac[k] * bc[i - k];
    c[i] = acc;
  }
  return TruncatedSeries(std::move(c), std::max(n, kDefaultMaxOrder));
}

TruncatedSeries operator*(cplx s, const TruncatedSeries& a) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v *= s;
  return TruncatedSeries(std::move(c), std::max(a.order(), kDefaultMaxOrder));
}

TruncatedSeries arith(const TruncatedSeries& a, const TruncatedSeries& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::invalid_argument("arith: unknown op");
}

TruncatedSeries reciprocal(const TruncatedSeries& a, double eps) {
  const auto ac = a.coeffs();
  if (std::abs(ac[0]) <= eps) {
    throw NearZeroConstantTerm("|c0| = " + std::to_string(std::abs(ac[0])));
  }
  const std::size_t n = a.order();
  const cplx inv0 = 1.0 / ac[0];
  std::vector<cplx> b(n + 1);
  b[0] = inv0;
  for (std::size_t i = 1; i <= n; ++i) {
    cplx acc = 0.0;
    for (std::size_t k = 1; k <= i; ++k) acc += ac[k] * b[i - k];
    b[i] = -inv0 * acc;
  }
  return TruncatedSeries(std::move(b), std::max(n, kDefaultMaxOrder));
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * reciprocal(b);
}

TruncatedSeries log_series(const TruncatedSeries& a) {
  require_constant_one(a, "log_series");
  // L' a = a'  =>  n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}   (a_0 = 1)
  const auto ac = a.coeffs();
  const std::size_t n = a.order();
  std::vector<cplx> l(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    cplx acc = static_cast<double>(i) * ac[i];
    for (std::size_t k = 1; k < i; ++k) acc -= static_cast<double>(k) * l[k] * ac[i - k];
    l[i] = acc / static_cast<double>(i);
  }
  return TruncatedSeries(std::move(l), std::max(n, kDefaultMaxOrder));
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
  require_constant_zero(a, "exp_series");
  // E' = a' E  =>  n E_n = sum_{k=1}^{n} k a_k E_{n-k}
  const auto ac = a.coeffs();
  const std::size_t n = a.order();
  std::vector<cplx> e(n + 1);
  e[0] = 1.0;
  for (std::size_t i = 1; i <= n; ++i) {
    cplx acc = 0.0;
    for (std::size_t k = 1; k <= i; ++k) acc += static_cast<double>(k) * ac[k] * e[i - k];
    e[i] = acc / static_cast<double>(i);
  }
  return TruncatedSeries(std::move(e), std::max(n, kDefaultMaxOrder));
}

TruncatedSeries pow_series(const TruncatedSeries& a, double p) {
  return exp_series(cplx(p) * log_series(a));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  const auto ac = a.coeffs();
  if (a.order() == 0) return TruncatedSeries::zero(0);
  std::vector<cplx> d(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i) d[i - 1] = static_cast<double>(i) * ac[i];
  return TruncatedSeries(std::move(d), std::max(a.order(), kDefaultMaxOrder));
}

TruncatedSeries integrate_dz_over_z(const TruncatedSeries& a) {
  require_constant_zero(a, "integrate_dz_over_z");
  const auto ac = a.coeffs();
  std::vector<cplx> r(a.order() + 1);
  for (std::size_t i = 1; i <= a.order(); ++i) r[i] = ac[i] / static_cast<double>(i);
  return TruncatedSeries(std::move(r), std::max(a.order(), kDefaultMaxOrder));
}

TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<cplx> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] * b[i];
  return TruncatedSeries(std::move(c), std::max(n, kDefaultMaxOrder));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (std::abs(inner[0]) > kConstantTermTol) {
    throw InnerConstantNonzero("|inner c0| = " + std::to_string(std::abs(inner[0])));
  }
  const std::size_t n = common_order(outer, inner);
  const auto oc = outer.coeffs();
  // Horner in series arithmetic; inner has no constant term so degree-n
  // truncation is exact at every step.
  TruncatedSeries acc = TruncatedSeries::constant(oc[n], n);
  const TruncatedSeries in = inner.truncated(n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * in + TruncatedSeries::constant(oc[k], n);
  }
  return acc;
}

SeriesValue eval_at(const TruncatedSeries& a, cplx z) {
  const double rz = std::abs(z);
  if (!(rz < 1.0)) throw OutsideDisc("|z| = " + std::to_string(rz));
  const auto ac = a.coeffs();
  cplx acc = 0.0;
  for (std::size_t k = ac.size(); k-- > 0;) acc = acc * z + ac[k];
  const double tail = std::abs(ac.back()) * std::pow(rz, static_cast<double>(a.order())) / (1.0 - rz);
  return {acc, tail};
}

double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i <= common_order(a, b); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace sstar
