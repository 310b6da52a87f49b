#include "sstar/bounds.hpp"

#include <cmath>
#include <sstream>

#include "sstar/errors.hpp"
#include "sstar/format.hpp"

namespace sstar {

double re_lower_validity_radius(const ClassParams& params) {
  return 1.0 / (2.0 * params.half_angle_cos() + 1.0);
}

double re_lower_bound(const ClassParams& params, double r) {
  const double limit = re_lower_validity_radius(params);
  if (!(r >= 0.0) || r > limit * (1.0 + 1e-15)) {
    throw RadiusOutOfRange("re_lower_bound: r = " + std::to_string(r) + " outside [0, " +
                           std::to_string(limit) + "]");
  }
  if (r >= limit) return 0.0;
  const double num = 1.0 - (2.0 * params.half_angle_cos() + 1.0) * r;
  if (num <= 0.0) return 0.0;
  return std::pow(num / (1.0 - r), params.p);
}

double re_upper_bound(const ClassParams& params, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw RadiusOutOfRange("re_upper_bound: r = " + std::to_string(r) + " outside [0, 1)");
  }
  return std::pow((1.0 + (2.0 * params.half_angle_cos() - 1.0) * r) / (1.0 - r), params.p);
}

GrowthBounds growth_bounds(const ClassParams& params, double r, const GTildeOptions& opts) {
  if (!(r > 0.0 && r < 1.0)) {
    throw RadiusOutOfRange("growth_bounds: r = " + std::to_string(r) + " outside (0, 1)");
  }
  const cplx at_minus = g_tilde_eval_real(params, -r, opts);
  const cplx at_plus = g_tilde_eval_real(params, r, opts);
  return {r * std::exp(at_minus.real()), r * std::exp(at_plus.real()),
          std::max(std::abs(at_minus.imag()), std::abs(at_plus.imag()))};
}

double gamma_bound(const ClassParams& params, std::size_t n) {
  if (n < 1) throw std::invalid_argument("gamma_bound: n must be >= 1");
  return params.lambda1_abs() / (2.0 * static_cast<double>(n));
}

double coeff_bound(const ClassParams& params, std::size_t n) {
  if (n < 2) throw std::invalid_argument("coeff_bound: n must be >= 2");
  const double a = params.lambda1_abs();
  double value = a / static_cast<double>(n - 1);
  for (std::size_t k = 2; k <= n - 1; ++k) value *= 1.0 + a / static_cast<double>(k - 1);
  return value;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::re_lower: return "re_lower";
    case BoundKind::re_upper: return "re_upper";
    case BoundKind::growth_lower: return "growth_lower";
    case BoundKind::growth_upper: return "growth_upper";
    case BoundKind::gamma: return "gamma";
    case BoundKind::coeff: return "coeff";
  }
  return "unknown";
}

BoundTable re_table(const ClassParams& params, const std::vector<double>& radii) {
  BoundTable t{BoundKind::re_lower, params, {}, true};
  for (double r : radii) {
    BoundEntry e;
    e.key = r;
    try {
      e.value = re_lower_bound(params, r);
    } catch (const RadiusOutOfRange& ex) {
      e.warning = ex.what();
    }
    try {
      e.value_upper = re_upper_bound(params, r);
    } catch (const RadiusOutOfRange& ex) {
      e.warning = ex.what();
    }
    t.entries.push_back(std::move(e));
  }
  return t;
}

BoundTable growth_table(const ClassParams& params, const std::vector<double>& radii,
                        const GTildeOptions& opts) {
  BoundTable t{BoundKind::growth_lower, params, {}, true};
  for (double r : radii) {
    BoundEntry e;
    e.key = r;
    try {
      const GrowthBounds g = growth_bounds(params, r, opts);
      e.value = g.lower;
      e.value_upper = g.upper;
    } catch (const RadiusOutOfRange& ex) {
      e.warning = ex.what();
    } catch (const TailNotConverged& ex) {
      e.warning = ex.what();
    }
    t.entries.push_back(std::move(e));
  }
  return t;
}

BoundTable gamma_table(const ClassParams& params, std::size_t n_max) {
  BoundTable t{BoundKind::gamma, params, {}, false};
  for (std::size_t n = 1; n <= n_max; ++n) {
    t.entries.push_back({static_cast<double>(n), gamma_bound(params, n), std::nullopt, {}});
  }
  return t;
}

BoundTable coeff_table(const ClassParams& params, std::size_t n_max) {
  BoundTable t{BoundKind::coeff, params, {}, false};
  for (std::size_t n = 2; n <= n_max; ++n) {
    t.entries.push_back({static_cast<double>(n), coeff_bound(params, n), std::nullopt, {}});
  }
  return t;
}

std::string table_to_csv(const BoundTable& table) {
  std::ostringstream os;
  os << "index_or_radius,value";
  if (table.paired) os << ",value_upper";
  os << '\n';
  for (const auto& e : table.entries) {
    os << format_number(e.key) << ',' << (e.value ? format_number(*e.value) : "");
    if (table.paired) os << ',' << (e.value_upper ? format_number(*e.value_upper) : "");
    os << '\n';
  }
  return os.str();
}

nlohmann::json table_to_json(const BoundTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : table.entries) {
    nlohmann::json row{{"index_or_radius", e.key}};
    row["value"] = e.value ? nlohmann::json(*e.value) : nlohmann::json(nullptr);
    if (table.paired) {
      row["value_upper"] = e.value_upper ? nlohmann::json(*e.value_upper) : nlohmann::json(nullptr);
    }
    if (!e.warning.empty()) row["warning"] = e.warning;
    rows.push_back(std::move(row));
  }
  return {{"kind", to_string(table.kind)},
          {"alpha1", table.params.alpha1},
          {"alpha2", table.params.alpha2},
          {"entries", rows}};
}

}  // namespace sstar
