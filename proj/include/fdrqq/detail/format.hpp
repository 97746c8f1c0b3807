#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace fdrqq::detail {

// Fixed-point decimal with a given number of places. Locale-independent
// ('.' decimal point always); -0 normalized to 0.
inline std::string format_fixed(double value, int precision) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, precision);
  return std::string(buf, ptr);
}

// Shortest form with at most 12 significant digits ("%.12g" style:
// trailing zeros dropped, scientific notation for extreme magnitudes).
inline std::string format_general(double value) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

}  // namespace fdrqq::detail
