#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>

#include "netaug/types.hpp"

namespace netaug::detail {

struct Tokenizer {
  std::string line;
  std::size_t line_no;
  std::size_t pos = 0;

  std::size_t column() const { return pos + 1; }
  bool next(std::string& token, std::size_t& col) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) return false;
    col = pos + 1;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    token = line.substr(start, pos - start);
    return true;
  }
};

inline std::uint64_t parse_uint(const std::string& text, std::size_t line, std::size_t col) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, col, "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

inline std::uint64_t parse_keyed(const std::string& token, const std::string& key, std::size_t line, std::size_t col) {
  if (token.rfind(key + "=", 0) != 0) throw ParseError(line, col, "expected " + key + "=<uint>");
  return parse_uint(token.substr(key.size() + 1), line, col + key.size() + 1);
}

}  // namespace netaug::detail
