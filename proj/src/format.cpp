#include "sstar/format.hpp"

#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>

namespace sstar {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << value;
  return os.str();
}

}  // namespace sstar
