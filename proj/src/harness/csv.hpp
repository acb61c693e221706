#pragma once

#include <string>
#include <string_view>

namespace xbench::harness {

// RFC 4180 quoting, only when needed.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace xbench::harness
