#pragma once

// The generator G(z) = ((1 + c z) / (1 - z))^p of the two-sided class, its
// Taylor coefficients lambda_n, the integrated generator
// G~(z) = int_0^z (G(t) - 1) / t dt, and the target sector Omega.

#include <complex>
#include <cstddef>
#include <vector>

#include "sstar/series.hpp"

namespace sstar {

struct ClassParams {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  /// (alpha2 - alpha1) / (alpha2 + alpha1), in (-1, 1).
  double theta = 0.0;
  /// exp(i pi theta), on the unit circle.
  cplx c = 1.0;
  /// (alpha1 + alpha2) / 2, the exponent of G.
  double p = 1.0;

  /// cos(pi theta / 2) = |1 + c| / 2. Every bound formula uses this reading
  /// of the half-angle cosine.
  double half_angle_cos() const;
  /// |lambda_1| = (alpha1 + alpha2) cos(pi theta / 2).
  double lambda1_abs() const;
};

/// Both arguments must lie in (0, 1]; ParamOutOfRange otherwise.
ClassParams make_params(double alpha1, double alpha2);

/// lambda_1..lambda_{n_max} from the double binomial sum
///   lambda_n = sum_k C(n-1, k-1) C(p, k) (1 + c)^k.
/// The terms grow like 3^n while the sum stays O(1), so the sum is carried
/// in 200-digit binary floating point and rounded once at the end.
std::vector<cplx> lambda_coeffs(const ClassParams& params, std::size_t n_max);

/// lambda_n = p (1 + c) 2F1(1 - n, 1 - p; 2; 1 + c), with the terminating
/// hypergeometric sum built from its term ratio (same extended precision).
cplx lambda_via_2f1(const ClassParams& params, std::size_t n);

/// Terminating Gauss hypergeometric sum 2F1(-m, b; c; x) for integer m >= 0,
/// evaluated in extended precision.
cplx hyp2f1_terminating(std::size_t m, double b, double c, cplx x);

/// Taylor series of G to the given order. Coefficients come from the
/// three-term recurrence of (1 - z)(1 + c z) G' = p (1 + c) G, which is
/// stable in double precision at every order.
TruncatedSeries g_series(const ClassParams& params, std::size_t order);

/// Principal-branch value of G at |z| < 1 (OutsideDisc otherwise).
cplx g_eval(const ClassParams& params, cplx z);

/// G'(z) = p (1 + c) G(z) / ((1 + c z)(1 - z)).
cplx g_prime_eval(const ClassParams& params, cplx z);

/// Coefficient n is lambda_n / n; constant term 0. order >= 1.
TruncatedSeries g_tilde_series(const ClassParams& params, std::size_t order);

struct GTildeOptions {
  double tolerance = 1e-10;
  std::size_t max_order = kDefaultMaxOrder;
};

/// G~(r) for real |r| < 1 by partial sums, stopping once the tail bound
/// drops below the tolerance. TailNotConverged if max_order is reached first.
cplx g_tilde_eval_real(const ClassParams& params, double r, const GTildeOptions& opts = {});

/// G~(z) for complex |z| < 1 by graded Gauss-Legendre quadrature of
/// (G(sz) - 1) / s over s in [0, 1]. Accurate to ~1e-13 for |z| <= 0.999.
cplx g_tilde_eval(const ClassParams& params, cplx z);

/// True iff -pi alpha1 / 2 - slack < arg w < pi alpha2 / 2 + slack.
/// ZeroArgument if w == 0.
bool omega_contains(const ClassParams& params, cplx w, double slack = 0.0);

struct RealPartExtrema {
  double min_re;
  double max_re;
};

/// min / max of Re G(r e^{i phi}) over phi = 2 pi j / n_angles. The parallel
/// and serial versions return bit-identical results.
RealPartExtrema g_real_part_extrema(const ClassParams& params, double r, std::size_t n_angles);
RealPartExtrema g_real_part_extrema_serial(const ClassParams& params, double r,
                                           std::size_t n_angles);

}  // namespace sstar
