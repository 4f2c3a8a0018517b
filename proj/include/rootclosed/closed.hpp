#pragma once

#include <optional>
#include <utility>

#include "rootclosed/error.hpp"
#include "rootclosed/rootset.hpp"
#include "rootclosed/rootsys.hpp"

namespace rootclosed {

/// A pair (i, j) of members of s whose sum is a root outside s, if any.
inline std::optional<std::pair<int, int>> closedness_violation(const RootSystem& rs, const RootSet& s) {
  std::optional<std::pair<int, int>> bad;
  s.for_each([&](int i) {
    if (bad) return;
    (s & rs.addable(i)).for_each([&](int j) {
      if (!bad && j > i && !s.contains(rs.sum_index(i, j))) bad = std::pair{i, j};
    });
  });
  return bad;
}

inline bool is_closed(const RootSystem& rs, const RootSet& s) { return !closedness_violation(rs, s); }

/// True when s plus one root beta is closed, given that s itself is closed.
inline bool closed_with(const RootSystem& rs, const RootSet& s, int beta) {
  if (s.contains(beta)) return true;
  bool ok = true;
  (s & rs.addable(beta)).for_each([&](int g) { ok = ok && s.contains(rs.sum_index(beta, g)); });
  return ok;
}

inline bool is_symmetric(const RootSystem& rs, const RootSet& s) { return rs.negate(s) == s; }

struct Parts {
  RootSet sym;
  RootSet spec;
};

/// Symmetric part {a in S : -a in S} and special part S \ sym.
inline Parts split_parts(const RootSystem& rs, const RootSet& s) {
  if (!is_closed(rs, s)) throw Error("split_parts: set is not closed");
  Parts p;
  p.sym = s & rs.negate(s);
  p.spec = s - p.sym;
  return p;
}

/// Members of t that are the sum of two members of t.
inline RootSet sum_set(const RootSystem& rs, const RootSet& t) {
  RootSet out;
  t.for_each([&](int i) {
    (t & rs.addable(i)).for_each([&](int j) {
      const int k = rs.sum_index(i, j);
      if (t.contains(k)) out.insert(k);
    });
  });
  return out;
}

/// Positive roots beta outside s such that s + {beta} is closed.
inline RootSet positive_normalizer(const RootSystem& rs, const RootSet& s) {
  RootSet out;
  for (int b = 0; b < rs.num_positive(); ++b)
    if (!s.contains(b) && closed_with(rs, s, b)) out.insert(b);
  return out;
}

/// All alpha outside t and -t for which t + {alpha, -alpha} is closed.
inline RootSet lemma5_hull(const RootSystem& rs, const RootSet& t) {
  const RootSet excluded = t | rs.negate(t);
  RootSet out;
  for (int a = 0; a < rs.size(); ++a) {
    if (excluded.contains(a)) continue;
    RootSet u = t;
    u.insert(a);
    u.insert(rs.neg(a));
    if (is_closed(rs, u)) out.insert(a);
  }
  return out;
}

}  // namespace rootclosed
