#pragma once

// Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
//
// Every binary operation truncates to the smaller of the two orders; nothing
// ever extends a series silently. Values are immutable once built.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sstar {

using cplx = std::complex<double>;

/// Default cap on the truncation order. The coefficient recursions are O(N^2).
inline constexpr std::size_t kDefaultMaxOrder = 256;

/// Absolute tolerance for the c_0 == 0 / c_0 == 1 preconditions.
inline constexpr double kConstantTermTol = 1e-12;

/// Default threshold below which reciprocal() refuses a constant term.
inline constexpr double kDefaultReciprocalEps = 1e-12;

class TruncatedSeries {
 public:
  /// Builds from c_0..c_N. Throws NonFiniteCoefficient on NaN/Inf,
  /// std::invalid_argument on an empty list, OrderTooLarge past max_order.
  explicit TruncatedSeries(std::vector<cplx> coeffs,
                           std::size_t max_order = kDefaultMaxOrder);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries constant(cplx value, std::size_t order);
  /// The series of z (order >= 1), i.e. [0, 1, 0, ...].
  static TruncatedSeries identity(std::size_t order);
  /// 1 + z + z^2 + ... + z^order.
  static TruncatedSeries geometric(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t n) const { return coeffs_.at(n); }

  /// Same coefficients, cut at a lower order.
  TruncatedSeries truncated(std::size_t order) const;
  /// Multiplies by z^k, keeping the order (the top k coefficients drop out).
  TruncatedSeries shifted_up(std::size_t k) const;
  /// Divides by z^k (requires c_0..c_{k-1} to be zero within tolerance);
  /// the order drops by k.
  TruncatedSeries shifted_down(std::size_t k) const;

 private:
  std::vector<cplx> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
/// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(cplx s, const TruncatedSeries& a);

enum class ArithOp { add, sub, mul };
TruncatedSeries arith(const TruncatedSeries& a, const TruncatedSeries& b, ArithOp op);

/// b with a*b = 1 + O(z^{N+1}). Throws NearZeroConstantTerm if |c_0| <= eps.
TruncatedSeries reciprocal(const TruncatedSeries& a, double eps = kDefaultReciprocalEps);

/// a * reciprocal(b).
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// Principal logarithm; requires c_0 = 1 (ConstantTermNotOne otherwise).
TruncatedSeries log_series(const TruncatedSeries& a);

/// Exponential; requires c_0 = 0 (ConstantTermNotZero otherwise).
TruncatedSeries exp_series(const TruncatedSeries& a);

/// Principal power exp(p log a); requires c_0 = 1.
TruncatedSeries pow_series(const TruncatedSeries& a, double p);

/// Termwise derivative; the order drops by one (a constant maps to [0]).
TruncatedSeries derivative(const TruncatedSeries& a);

/// sum_{n>=1} (c_n / n) z^n, the integral of a(t)/t from 0 to z.
/// Requires c_0 = 0 (ConstantTermNotZero otherwise).
TruncatedSeries integrate_dz_over_z(const TruncatedSeries& a);

/// Termwise product a_n b_n.
TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b);

/// outer(inner(z)); requires inner's c_0 = 0 (InnerConstantNonzero).
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

struct SeriesValue {
  cplx value;
  /// |c_N| |z|^N / (1 - |z|), a rough size for the neglected tail.
  double tail_estimate;
};

/// Horner evaluation of the polynomial for |z| < 1 (OutsideDisc otherwise).
SeriesValue eval_at(const TruncatedSeries& a, cplx z);

/// Largest coefficient-wise distance |a_n - b_n| over the common orders.
double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace sstar
