#pragma once

// Closed-form bounds for the two-sided class: real part of z f'/f, growth of
// |f|, logarithmic coefficients and Taylor coefficients.
//
// The half-angle cosine in every formula is cos(pi theta / 2) = |1 + c| / 2,
// so that gamma_bound(n) * 2n == |lambda_1| holds as an identity.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sstar/generator.hpp"

namespace sstar {

/// Radius up to which the real-part lower bound is valid,
/// 1 / (2 cos(pi theta / 2) + 1).
double re_lower_validity_radius(const ClassParams& params);

/// ((1 - (2 cos + 1) r) / (1 - r))^p for 0 <= r <= validity radius;
/// exactly 0 at the right endpoint. RadiusOutOfRange outside.
double re_lower_bound(const ClassParams& params, double r);

/// ((1 + (2 cos - 1) r) / (1 - r))^p for 0 <= r < 1. RadiusOutOfRange outside.
double re_upper_bound(const ClassParams& params, double r);

struct GrowthBounds {
  double lower;
  double upper;
  /// max |Im G~(+-r)|; zero when alpha1 == alpha2. The bounds use the real
  /// parts only.
  double imag_discrepancy;
};

/// (r exp Re G~(-r), r exp Re G~(r)) for 0 < r < 1. Propagates TailNotConverged.
GrowthBounds growth_bounds(const ClassParams& params, double r, const GTildeOptions& opts = {});

/// |lambda_1| / (2n) = (alpha1 + alpha2) cos(pi theta / 2) / (2n), n >= 1.
double gamma_bound(const ClassParams& params, std::size_t n);

/// n = 2: (alpha1 + alpha2) cos; n >= 3: the product
/// (A / (n-1)) prod_{k=2}^{n-1} (1 + A / (k-1)) with A = (alpha1 + alpha2) cos.
double coeff_bound(const ClassParams& params, std::size_t n);

enum class BoundKind { re_lower, re_upper, growth_lower, growth_upper, gamma, coeff };

std::string to_string(BoundKind kind);

struct BoundEntry {
  /// Radius for re/growth tables, index n for gamma/coeff tables.
  double key = 0.0;
  std::optional<double> value;
  /// Paired upper bound when a table carries both sides (re, growth).
  std::optional<double> value_upper;
  /// Set when the value could not be computed for this row.
  std::string warning;
};

struct BoundTable {
  BoundKind kind = BoundKind::gamma;
  ClassParams params;
  std::vector<BoundEntry> entries;
  bool paired = false;
};

/// Lower bound in `value`, upper in `value_upper`. Rows beyond the lower
/// bound's validity radius get a null lower value and a warning.
BoundTable re_table(const ClassParams& params, const std::vector<double>& radii);
BoundTable growth_table(const ClassParams& params, const std::vector<double>& radii,
                        const GTildeOptions& opts = {});
BoundTable gamma_table(const ClassParams& params, std::size_t n_max);
/// Rows n = 2..n_max.
BoundTable coeff_table(const ClassParams& params, std::size_t n_max);

/// Columns index_or_radius,value[,value_upper]; empty field for null.
/// Numbers carry 12 significant digits and a '.' separator.
std::string table_to_csv(const BoundTable& table);
nlohmann::json table_to_json(const BoundTable& table);

}  // namespace sstar
