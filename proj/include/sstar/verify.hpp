#pragma once

// Seeded invariant suites, one per library module.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sstar {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct VerifyFailure {
  std::string case_id;
  std::string expected;
  std::string observed;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::size_t cases_run = 0;
  /// Distinct check names, in first-run order.
  std::vector<std::string> checks;
  std::vector<VerifyFailure> failures;
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// series, generator, membership, bounds, extremal.
const std::vector<std::string>& known_suites();

/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_suite(std::string_view name, std::uint64_t seed = kDefaultSeed);

/// Expands "all" and runs every requested suite in the given order.
std::vector<VerifyReport> run_suites(const std::vector<std::string>& names,
                                     std::uint64_t seed = kDefaultSeed);

/// wall_seconds is omitted when include_timing is false, so that repeated
/// runs serialize identically.
nlohmann::json verify_to_json(const std::vector<VerifyReport>& reports, bool include_timing);

}  // namespace sstar
