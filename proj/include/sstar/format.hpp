#pragma once

#include <string>

namespace sstar {

/// 12 significant digits, '.' separator, independent of the global locale.
std::string format_number(double value);

}  // namespace sstar
