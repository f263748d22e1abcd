#include "hardy/ext.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "hardy/error.hpp"

namespace hardy {

ExtNonneg::ExtNonneg(double value) : value_(value) {
  if (!(value >= 0.0)) throw InvalidInput("extended nonnegative value must be >= 0");
}

ExtNonneg ext_pow(ExtNonneg x, double alpha) { return ExtNonneg(ext::pow(x.value(), alpha)); }

ExtNonneg max(ExtNonneg a, ExtNonneg b) { return a < b ? b : a; }

double relative_difference(double a, double b) {
  if (a == b) return 0.0;
  if (std::isinf(a) || std::isinf(b)) return kInf;
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) / scale;
}

std::string to_string(ExtNonneg x) {
  if (x.is_inf()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x.value());
  return buf;
}

std::ostream& operator<<(std::ostream& os, ExtNonneg x) { return os << to_string(x); }

}  // namespace hardy
