#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>

#include "rootclosed/error.hpp"
#include "rootclosed/rootset.hpp"
#include "rootclosed/rootsys.hpp"

namespace rootclosed {

/// Parses a linear combination of simple roots such as "a1+2a2+2a3" or
/// "-a3" into its coordinate vector.
inline Coords parse_coords(int rank, std::string_view text) {
  Coords c(rank, 0);
  std::size_t p = 0;
  auto fail = [&](const std::string& why) { throw Error("bad root '" + std::string(text) + "': " + why); };
  auto skip_ws = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  auto read_int = [&] {
    long v = 0;
    const std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      v = v * 10 + (text[p] - '0');
      if (v > 1000) fail("number too large");
      ++p;
    }
    return p == start ? -1L : v;
  };
  skip_ws();
  if (p == text.size()) fail("empty");
  bool first = true;
  while (p < text.size()) {
    int sign = 1;
    if (text[p] == '+' || text[p] == '-') {
      sign = text[p] == '-' ? -1 : 1;
      ++p;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    long coef = read_int();
    if (coef == 0) fail("zero coefficient");
    if (coef < 0) coef = 1;
    skip_ws();
    if (p == text.size() || (text[p] != 'a' && text[p] != 'A')) fail("expected 'a<k>'");
    ++p;
    const long k = read_int();
    if (k < 1 || k > rank) fail("simple root index out of range");
    c[k - 1] += sign * static_cast<int>(coef);
    skip_ws();
    first = false;
  }
  return c;
}

inline int parse_root(const RootSystem& rs, std::string_view text) {
  const Coords c = parse_coords(rs.rank(), text);
  const auto idx = rs.find(c);
  if (!idx) throw Error("'" + std::string(text) + "' is not a root of " + rs.type().name());
  return *idx;
}

/// Comma-separated roots; "Phi" and "Phi+" name the whole system and the
/// positive roots. Whitespace is ignored.
inline RootSet parse_set(const RootSystem& rs, std::string_view text) {
  RootSet s;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item;
    for (char ch : text.substr(start, end - start))
      if (!std::isspace(static_cast<unsigned char>(ch))) item += ch;
    if (item == "Phi")
      s |= rs.all();
    else if (item == "Phi+")
      s |= rs.positive();
    else if (!item.empty())
      s.insert(parse_root(rs, item));
    else if (end != text.size() || start != 0)
      throw Error("empty item in root list '" + std::string(text) + "'");
    start = end + 1;
  }
  return s;
}

inline std::string format_root(const RootSystem& rs, int root) {
  const Coords& c = rs.coords(root);
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (c[k] < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (std::abs(c[k]) != 1) out += std::to_string(std::abs(c[k]));
    out += "a" + std::to_string(k + 1);
  }
  return out;
}

inline std::string format_set(const RootSystem& rs, const RootSet& s) {
  std::string out;
  s.for_each([&](int i) {
    if (!out.empty()) out += ',';
    out += format_root(rs, i);
  });
  return out;
}

}  // namespace rootclosed
