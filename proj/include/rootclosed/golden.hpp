#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootclosed/enumerate.hpp"
#include "rootclosed/error.hpp"
#include "rootclosed/rootsys.hpp"

namespace rootclosed {

struct GoldenRow {
  RootSystemType type;
  ClassCounts counts;
};

enum class VerifyLevel { fast, full, extended };

inline VerifyLevel parse_verify_level(const std::string& s) {
  if (s == "fast") return VerifyLevel::fast;
  if (s == "full") return VerifyLevel::full;
  if (s == "extended") return VerifyLevel::extended;
  throw Error("unknown verify level '" + s + "' (expected fast, full or extended)");
}

/// Published class counts (special, mixed, symmetric, total) per type,
/// empty set excluded.
inline const std::vector<GoldenRow>& golden_counts() {
  static const std::vector<GoldenRow> rows{
      {{Family::A, 3}, {15, 13, 4, 32}},
      {{Family::B, 3}, {46, 33, 9, 88}},
      {{Family::C, 3}, {44, 34, 9, 87}},
      {{Family::A, 4}, {62, 70, 6, 138}},
      {{Family::B, 4}, {429, 311, 19, 759}},
      {{Family::C, 4}, {401, 334, 19, 754}},
      {{Family::D, 4}, {110, 102, 11, 223}},
      {{Family::F, 4}, {3579, 1242, 23, 4844}},
      {{Family::A, 5}, {317, 390, 10, 717}},
      {{Family::B, 5}, {6267, 3592, 35, 9894}},
      {{Family::C, 5}, {5744, 4074, 35, 9853}},
      {{Family::D, 5}, {1145, 877, 15, 2037}},
      {{Family::A, 6}, {2044, 2476, 14, 4534}},
      {{Family::B, 6}, {151386, 61001, 64, 212451}},
      {{Family::C, 6}, {137456, 74081, 64, 211601}},
      {{Family::D, 6}, {20549, 11310, 31, 31890}},
      {{Family::E, 6}, {94635, 29487, 20, 124142}},
      {{Family::A, 7}, {16998, 18959, 21, 35978}},
      {{Family::B, 7}, {6115473, 1648192, 109, 7763774}},
      {{Family::C, 7}, {5523891, 2163473, 109, 7687473}},
      {{Family::D, 7}, {623510, 228140, 44, 851694}},
      {{Family::E, 7}, {144937928, 10347518, 46, 155285492}},
  };
  return rows;
}

inline std::vector<GoldenRow> golden_rows_for(VerifyLevel level) {
  const int max_rank = level == VerifyLevel::fast ? 3 : level == VerifyLevel::full ? 4 : 5;
  std::vector<GoldenRow> out;
  for (const auto& r : golden_counts())
    if (r.type.rank <= max_rank) out.push_back(r);
  return out;
}

inline std::optional<ClassCounts> golden_lookup(const RootSystemType& t) {
  for (const auto& r : golden_counts())
    if (r.type == t) return r.counts;
  return std::nullopt;
}

}  // namespace rootclosed
