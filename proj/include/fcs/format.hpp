#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace fcs {

/// Shortest round-trip decimal representation; keeps text output
/// deterministic across runs and locales.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace fcs
