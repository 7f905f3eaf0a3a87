#pragma once

#include <charconv>
#include <string>

#include "cutplane/errors.hpp"

namespace cutplane {

// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline double parse_double_strict(const std::string& s) {
  const char* begin = s.c_str();
  if (*begin == '+') ++begin;
  const char* end = s.c_str() + s.size();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError("malformed number '" + s + "'");
  return v;
}

}  // namespace cutplane
