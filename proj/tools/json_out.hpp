#pragma once

#include <string>
#include <vector>

#include "upd/types.hpp"

namespace upd::tool {

// Report rows are assembled by hand: the schema is small and fixed, arbitrary
// precision integers must print as JSON numbers, and stdout has to be
// byte-stable for identical inputs.

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          static const char* hex = "0123456789abcdef";
          out += "\\u00";
          out += hex[(c >> 4) & 0xf];
          out += hex[c & 0xf];
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string quoted(const std::string& s) {
  return '"' + json_escape(s) + '"';
}

inline std::string string_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += quoted(items[i]);
  }
  out += ']';
  return out;
}

inline std::string integer_array(const std::vector<Integer>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i].str();
  }
  out += ']';
  return out;
}

}  // namespace upd::tool
