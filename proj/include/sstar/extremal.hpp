#pragma once

// Extremal functions as truncated series, and logarithmic coefficients
//   log(f(z) / z) = sum_{n>=1} 2 gamma_n z^n
// of normalized functions.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sstar/generator.hpp"
#include "sstar/series.hpp"

namespace sstar {

/// f = z + a_2 z^2 + ... with c0 = 0 and c1 = 1 exactly.
class NormalizedFunction {
 public:
  /// NotNormalized unless c0 == 0 and c1 == 1 exactly.
  NormalizedFunction(TruncatedSeries series, std::string label);

  const TruncatedSeries& series() const noexcept { return series_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t order() const noexcept { return series_.order(); }

 private:
  TruncatedSeries series_;
  std::string label_;
};

/// z exp G~(z) to the given order (>= 1). Its z f'/f is G.
NormalizedFunction extremal_series(const ClassParams& params, std::size_t order);

/// z / (1 - z)^{2 beta}, 0 < beta <= 1 (ParamOutOfRange otherwise).
NormalizedFunction koebe_beta_series(double beta, std::size_t order);

/// gamma_1..gamma_{n_max}. Needs order(f) >= n_max + 1, since gamma_n
/// depends on a_2..a_{n+1}.
std::vector<cplx> log_coeffs(const NormalizedFunction& f, std::size_t n_max);

/// gamma_1 = a_2 / 2, gamma_2 = (a_3 - a_2^2 / 2) / 2.
std::pair<cplx, cplx> first_log_coeffs_from_a(cplx a2, cplx a3);

/// {"label": ..., "coeffs": [[re, im], ...]}
nlohmann::json function_to_json(const NormalizedFunction& f);

}  // namespace sstar
