#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootclosed/closed.hpp"
#include "rootclosed/enumerate.hpp"
#include "rootclosed/error.hpp"
#include "rootclosed/rootsys.hpp"

namespace rootclosed {

/// Largest point count accepted by the topology counters.
inline constexpr int kTopologyMaxPoints = 6;

/// Specialization preorder of a topology on {0..n-1}:
/// m[i][j] = 1 iff i lies in the closure of {j}.
struct TopologyMatrix {
  int n = 0;
  std::vector<std::vector<std::uint8_t>> m;

  static TopologyMatrix identity(int n) {
    TopologyMatrix t{n, std::vector<std::vector<std::uint8_t>>(n, std::vector<std::uint8_t>(n, 0))};
    for (int i = 0; i < n; ++i) t.m[i][i] = 1;
    return t;
  }

  friend bool operator==(const TopologyMatrix&, const TopologyMatrix&) = default;
};

/// Reflexive and transitive.
inline bool is_topology(const TopologyMatrix& t) {
  for (int i = 0; i < t.n; ++i)
    if (!t.m[i][i]) return false;
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      if (!t.m[i][j]) continue;
      for (int k = 0; k < t.n; ++k)
        if (t.m[j][k] && !t.m[i][k]) return false;
    }
  return true;
}

inline bool is_t0(const TopologyMatrix& t) {
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j)
      if (t.m[i][j] && t.m[j][i]) return false;
  return true;
}

/// Index of alpha_{ij} = e_i - e_j (i != j, 0-based) in the A_{n-1} system.
/// For i < j this is alpha_{i+1} + ... + alpha_j in simple-root coordinates.
inline int alpha_index(const RootSystem& rs, int i, int j) {
  const int n = rs.rank() + 1;
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw Error("alpha_index: bad point pair");
  const int lo = std::min(i, j), hi = std::max(i, j);
  Coords c(rs.rank(), 0);
  for (int k = lo; k < hi; ++k) c[k] = 1;
  const int idx = *rs.find(c);
  return i < j ? idx : rs.neg(idx);
}

namespace detail {
inline void check_type_a(const RootSystem& rs, int n) {
  if (rs.type().family != Family::A || rs.rank() != n - 1)
    throw Error("topology bridge needs the root system A_" + std::to_string(n - 1));
}
}  // namespace detail

inline TopologyMatrix matrix_from_closed(const RootSystem& rs, const RootSet& s) {
  const int n = rs.rank() + 1;
  detail::check_type_a(rs, n);
  if (!is_closed(rs, s)) throw Error("matrix_from_closed: set is not closed");
  TopologyMatrix t = TopologyMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && s.contains(alpha_index(rs, i, j))) t.m[i][j] = 1;
  return t;
}

inline RootSet closed_from_matrix(const RootSystem& rs, const TopologyMatrix& t) {
  detail::check_type_a(rs, t.n);
  if (!is_topology(t)) throw Error("closed_from_matrix: matrix is not reflexive and transitive");
  RootSet s;
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      if (i != j && t.m[i][j]) s.insert(alpha_index(rs, i, j));
  return s;
}

struct TopologyCounts {
  std::uint64_t labeled = 0;
  std::uint64_t classes = 0;
};

/// Labeled topologies (and homeomorphism classes) on n points via the
/// orbit sizes |W| / |W_T| of the closed-set classes of A_{n-1}; the empty
/// set (discrete topology) contributes one labeled topology and one class.
inline TopologyCounts count_topologies(int n, bool t0_only, const EnumerateOptions& opts = {}) {
  if (n < 1 || n > kTopologyMaxPoints)
    throw Error("topology counts need 1 <= n <= " + std::to_string(kTopologyMaxPoints));
  TopologyCounts c{1, 1};
  if (n == 1) return c;
  const WeylAction wa = weyl_group(RootSystemType{Family::A, n - 1});
  const ClassificationResult res = classify_all(wa, opts);
  const std::uint64_t w = wa.group().order();
  auto add = [&](const std::vector<ClassRecord>& v) {
    for (const auto& r : v) {
      c.labeled += w / r.stab_order;
      ++c.classes;
    }
  };
  add(res.special);
  if (!t0_only) {
    add(res.mixed);
    add(res.symmetric);
  }
  return c;
}

inline std::uint64_t count_labeled(int n, bool t0_only) { return count_topologies(n, t0_only).labeled; }

/// Direct count over all n x n boolean matrices with unit diagonal.
inline std::uint64_t brute_force_count_labeled(int n, bool t0_only) {
  if (n < 1 || n > 5) throw Error("brute-force topology count needs 1 <= n <= 5");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::uint64_t count = 0;
  TopologyMatrix t = TopologyMatrix::identity(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    for (std::size_t c = 0; c < cells.size(); ++c) t.m[cells[c].first][cells[c].second] = mask >> c & 1u;
    if (is_topology(t) && (!t0_only || is_t0(t))) ++count;
  }
  return count;
}

}  // namespace rootclosed
