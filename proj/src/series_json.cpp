#include "sstar/series_json.hpp"

#include <fstream>
#include <stdexcept>

namespace sstar {

nlohmann::json series_to_json(const TruncatedSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const cplx& c : s.coeffs()) arr.push_back({c.real(), c.imag()});
  return arr;
}

TruncatedSeries series_from_json(const nlohmann::json& j, std::size_t max_order) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("series must be a non-empty JSON array");
  std::vector<cplx> coeffs;
  coeffs.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw std::invalid_argument("series entries must be [re, im] number pairs");
    }
    coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return TruncatedSeries(std::move(coeffs), max_order);
}

TruncatedSeries read_series_file(const std::filesystem::path& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open series file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed series file " + path.string() + ": " + e.what());
  }
  return series_from_json(j, max_order);
}

}  // namespace sstar
