#include "sstar/extremal.hpp"

#include <string>

#include "sstar/errors.hpp"
#include "sstar/format.hpp"
#include "sstar/series_json.hpp"

namespace sstar {

NormalizedFunction::NormalizedFunction(TruncatedSeries series, std::string label)
    : series_(std::move(series)), label_(std::move(label)) {
  if (series_.order() < 1 || series_[0] != cplx(0.0) || series_[1] != cplx(1.0)) {
    throw NotNormalized("'" + label_ + "' must start 0 + 1 z");
  }
}

namespace {

// z * s(z), with the leading coefficients set exactly.
TruncatedSeries times_z(const TruncatedSeries& s) {
  const std::size_t order = s.order() + 1;
  std::vector<cplx> c(order + 1);
  for (std::size_t n = 0; n <= s.order(); ++n) c[n + 1] = s[n];
  c[0] = 0.0;
  c[1] = 1.0;
  return TruncatedSeries(std::move(c), std::max(order, kDefaultMaxOrder));
}

}  // namespace

NormalizedFunction extremal_series(const ClassParams& params, std::size_t order) {
  if (order < 1) throw std::invalid_argument("extremal_series: order must be >= 1");
  const TruncatedSeries tilde =
      order == 1 ? TruncatedSeries::zero(0) : g_tilde_series(params, order - 1);
  return {times_z(exp_series(tilde)), "extremal(" + format_number(params.alpha1) + "," +
                                          format_number(params.alpha2) + ")"};
}

NormalizedFunction koebe_beta_series(double beta, std::size_t order) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw ParamOutOfRange("beta = " + std::to_string(beta) + " not in (0, 1]");
  }
  if (order < 1) throw std::invalid_argument("koebe_beta_series: order must be >= 1");
  std::vector<cplx> one_minus_z(order);
  one_minus_z[0] = 1.0;
  if (order >= 2) one_minus_z[1] = -1.0;
  const TruncatedSeries base(std::move(one_minus_z), std::max(order, kDefaultMaxOrder));
  return {times_z(pow_series(base, -2.0 * beta)), "koebe-beta(" + format_number(beta) + ")"};
}

std::vector<cplx> log_coeffs(const NormalizedFunction& f, std::size_t n_max) {
  if (f.order() < n_max + 1) {
    throw std::invalid_argument("log_coeffs: need order >= " + std::to_string(n_max + 1) +
                                ", got " + std::to_string(f.order()));
  }
  const TruncatedSeries l = log_series(f.series().shifted_down(1));
  std::vector<cplx> gamma(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) gamma[n - 1] = l[n] / 2.0;
  return gamma;
}

std::pair<cplx, cplx> first_log_coeffs_from_a(cplx a2, cplx a3) {
  return {a2 / 2.0, (a3 - a2 * a2 / 2.0) / 2.0};
}

nlohmann::json function_to_json(const NormalizedFunction& f) {
  return {{"label", f.label()}, {"coeffs", series_to_json(f.series())}};
}

}  // namespace sstar
