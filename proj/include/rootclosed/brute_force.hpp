#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <vector>

#include "rootclosed/closed.hpp"
#include "rootclosed/enumerate.hpp"
#include "rootclosed/weyl.hpp"

namespace rootclosed {

/// Largest root count accepted by the exhaustive oracle.
inline constexpr int kBruteForceMaxRoots = 20;

/// Exhaustive classification: every subset is tested for closedness and
/// closed sets are partitioned into W-orbits by orbit closure under the
/// simple reflections. The representative of an orbit is its
/// lexicographically least member. Independent of the successor algorithm.
inline ClassificationResult brute_force_classify(const WeylAction& wa) {
  const RootSystem& rs = wa.roots();
  const int n = rs.size();
  if (n > kBruteForceMaxRoots)
    throw Error("brute_force_classify: " + rs.type().name() + " has too many roots for exhaustive search");
  const auto start = std::chrono::steady_clock::now();

  // Root permutations as 32-bit mask maps.
  std::vector<std::vector<int>> gens;
  for (const auto& s : wa.simple_reflections()) gens.push_back(s.images());
  auto apply = [&](const std::vector<int>& g, std::uint32_t m) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) out |= std::uint32_t{1} << g[i];
    return out;
  };
  auto to_set = [&](std::uint32_t m) {
    RootSet s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) s.insert(i);
    return s;
  };
  auto closed = [&](std::uint32_t m) {
    for (int i = 0; i < n; ++i) {
      if (!(m >> i & 1u)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (!(m >> j & 1u)) continue;
        const int k = rs.sum_index(i, j);
        if (k != RootSystem::kNotARoot && !(m >> k & 1u)) return false;
      }
    }
    return true;
  };

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> visited(total, false);
  const std::uint64_t w_order = wa.group().order();
  ClassificationResult res;
  res.type = rs.type();
  for (std::uint64_t m = 1; m < total; ++m) {
    if (visited[m] || !closed(static_cast<std::uint32_t>(m))) continue;
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(m)};
    visited[m] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (const auto& g : gens) {
        const std::uint32_t x = apply(g, orbit[q]);
        if (!visited[x]) {
          visited[x] = true;
          orbit.push_back(x);
        }
      }
    RootSet rep = to_set(orbit[0]);
    for (auto x : orbit) {
      RootSet s = to_set(x);
      if (lex_less(s, rep)) rep = s;
    }
    ClassRecord r = make_record(wa, rep, wa.group().set_stabilizer(rep), invariant_key(wa, rep));
    if (r.stab_order * orbit.size() != w_order) throw Error("internal: orbit-stabilizer mismatch");
    switch (r.kind) {
      case ClassKind::special: res.special.push_back(std::move(r)); break;
      case ClassKind::mixed: res.mixed.push_back(std::move(r)); break;
      case ClassKind::symmetric: res.symmetric.push_back(std::move(r)); break;
    }
  }
  res.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return res;
}

/// True when both lists hold the same W-classes: equal length, and each
/// class of `a` is conjugate (by an explicit transporter) to exactly one
/// class of `b` of the same kind.
inline bool same_classes(const WeylAction& wa, const std::vector<ClassRecord>& a, const std::vector<ClassRecord>& b) {
  if (a.size() != b.size()) return false;
  std::map<InvariantKey, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < b.size(); ++i) by_key[b[i].key].push_back(i);
  std::vector<bool> used(b.size(), false);
  for (const auto& r : a) {
    auto it = by_key.find(r.key);
    if (it == by_key.end()) return false;
    bool matched = false;
    for (std::size_t i : it->second) {
      if (used[i] || b[i].kind != r.kind) continue;
      const auto g = wa.group().transporter(r.rep, b[i].rep);
      if (g && g->image(r.rep) == b[i].rep) {
        used[i] = matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

inline bool same_classification(const WeylAction& wa, const ClassificationResult& x, const ClassificationResult& y) {
  return same_classes(wa, x.special, y.special) && same_classes(wa, x.mixed, y.mixed) &&
         same_classes(wa, x.symmetric, y.symmetric);
}

}  // namespace rootclosed
