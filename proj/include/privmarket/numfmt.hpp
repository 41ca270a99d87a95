#pragma once

#include <cstdio>
#include <string>

namespace privmarket {

/// Formats a double with the given number of significant digits (%g style).
/// 17 digits round-trips any IEEE double.
inline std::string format_double(double v, int significant_digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
  return buf;
}

inline std::string format_full(double v) { return format_double(v, 17); }

}  // namespace privmarket
