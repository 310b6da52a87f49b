#pragma once

// Series serialization: a JSON array of [re, im] pairs, index = degree.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sstar/series.hpp"

namespace sstar {

nlohmann::json series_to_json(const TruncatedSeries& s);

/// Throws std::invalid_argument on a malformed document.
TruncatedSeries series_from_json(const nlohmann::json& j, std::size_t max_order = kDefaultMaxOrder);

/// Reads a series file. Throws std::runtime_error if the file cannot be
/// opened and std::invalid_argument if its content is malformed.
TruncatedSeries read_series_file(const std::filesystem::path& path,
                                 std::size_t max_order = kDefaultMaxOrder);

}  // namespace sstar
