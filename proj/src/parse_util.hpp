#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "ignatiev/ordinal.hpp"

namespace ign::detail {

// Minimal cursor over an input string. All grammars skip whitespace between
// tokens.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool try_keyword(std::string_view kw) {
    skip_ws();
    if (text.substr(pos, kw.size()) == kw) {
      pos += kw.size();
      return true;
    }
    return false;
  }

  std::uint64_t nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
      if (value > (UINT64_MAX - digit) / 10) fail("number too large");
      value = value * 10 + digit;
      ++pos;
    }
    return value;
  }

  void expect_end() {
    if (!done()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }
};

// Shared between the ordinal, point and sequence parsers.
Ordinal parse_ordinal_at(Cursor& c);
ExtOrdinal parse_ext_ordinal_at(Cursor& c);

}  // namespace ign::detail
