#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "rootclosed.hpp"

namespace rctest {

using namespace rootclosed;

inline RootSystemType ty(const std::string& name) { return RootSystemType::parse(name); }

/// One row of a golden class table: kind, row number as printed, root list.
struct TableRow {
  ClassKind kind;
  int row = 0;
  std::string roots;
};

inline std::vector<TableRow> load_table(const std::string& file) {
  std::ifstream in(std::string(ROOTCLOSED_TEST_DATA) + "/" + file);
  if (!in) throw Error("cannot open test data " + file);
  std::vector<TableRow> rows;
  std::string kind, roots;
  int row = 0;
  while (in >> kind >> row >> roots) rows.push_back({parse_kind(kind), row, roots});
  return rows;
}

/// Smallest closed superset of s, by adding pairwise sums until stable.
inline RootSet closure(const RootSystem& rs, RootSet s) {
  for (;;) {
    RootSet add;
    s.for_each([&](int i) {
      (s & rs.addable(i)).for_each([&](int j) {
        const int k = rs.sum_index(i, j);
        if (!s.contains(k)) add.insert(k);
      });
    });
    if (add.empty()) return s;
    s |= add;
  }
}

/// A closed set drawn by closing a few random roots; sometimes restricted to
/// the positive roots so special sets are well represented.
inline RootSet random_closed_set(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  const bool positive_only = rng() % 2 == 0;
  std::uniform_int_distribution<int> pick(0, (positive_only ? rs.num_positive() : rs.size()) - 1);
  RootSet s;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) s.insert(pick(rng));
  return closure(rs, s);
}

/// Random element as a product of random simple reflections.
inline Perm random_element(const WeylAction& wa, std::mt19937_64& rng, int length = 40) {
  std::uniform_int_distribution<int> pick(0, wa.rank() - 1);
  Perm g = Perm::identity(wa.roots().size());
  for (int i = 0; i < length; ++i) g = wa.simple_reflection(pick(rng)) * g;
  return g;
}

/// Closed sets of a small system, by exhaustive subset scan (N <= 20).
inline std::vector<RootSet> all_closed_sets(const RootSystem& rs) {
  std::vector<RootSet> out;
  const int n = rs.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    RootSet s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) s.insert(i);
    if (is_closed(rs, s)) out.push_back(s);
  }
  return out;
}

/// Setwise stabilizer order by filtering every element.
inline std::uint64_t brute_stabilizer_order(const std::vector<Perm>& elements, const RootSet& s) {
  std::uint64_t c = 0;
  for (const auto& g : elements)
    if (g.image(s) == s) ++c;
  return c;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace rctest
