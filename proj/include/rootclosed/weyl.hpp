#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "rootclosed/perm.hpp"
#include "rootclosed/rootset.hpp"
#include "rootclosed/rootsys.hpp"

namespace rootclosed {

using Rational = boost::rational<long long>;

/// The Weyl group of a root system, acting on root indices.
class WeylAction {
 public:
  explicit WeylAction(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
    const int n = rs_->size();
    for (int j = 0; j < rs_->rank(); ++j) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = rs_->reflect(i, j);
      simple_.emplace_back(std::move(img));
    }
    group_ = PermGroup(n, simple_);
  }

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }
  /// Simple reflection s_{j+1} as a permutation of root indices.
  const Perm& simple_reflection(int j) const { return simple_[j]; }
  const std::vector<Perm>& simple_reflections() const { return simple_; }
  const PermGroup& group() const { return group_; }

  /// Reflection in an arbitrary root.
  Perm reflection(int root) const {
    const int n = rs_->size();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = rs_->reflect(i, root);
    return Perm(std::move(img));
  }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<Perm> simple_;
  PermGroup group_;
};

inline WeylAction weyl_group(std::shared_ptr<const RootSystem> rs) { return WeylAction(std::move(rs)); }
inline WeylAction weyl_group(const RootSystemType& t) { return WeylAction(make_root_system(t)); }

/// s_{j+1} acting on a weight in fundamental-weight coordinates.
inline Weight reflect_weight(const RootSystem& rs, int j, Weight v) {
  const int mj = v.coords[j];
  for (int i = 0; i < rs.rank(); ++i) v.coords[i] -= mj * rs.cartan(i, j);
  return v;
}

/// Applies a word s_{w[0]} s_{w[1]} ... (rightmost letter first) to a weight.
inline Weight apply_word(const RootSystem& rs, const std::vector<int>& word, Weight v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect_weight(rs, *it, std::move(v));
  return v;
}

/// Sum vector of a set of roots, in fundamental-weight coordinates.
inline Weight sum_vector(const RootSystem& rs, const RootSet& s) {
  Weight w{std::vector<int>(rs.rank(), 0)};
  s.for_each([&](int i) { w += rs.root_to_weight(i); });
  return w;
}

struct DominantResult {
  Weight weight;
  /// w with w(v) = weight, as a permutation of roots.
  Perm element;
  /// Simple-reflection indices (0-based), leftmost applied last.
  std::vector<int> word;
};

/// Dominant W-conjugate of v. The reflection applied at each step is the one
/// for the smallest index j with a negative coordinate.
inline DominantResult dominant_conjugate(const WeylAction& wa, Weight v) {
  const RootSystem& rs = wa.roots();
  Perm w = Perm::identity(rs.size());
  std::vector<int> word;
  for (;;) {
    auto it = std::find_if(v.coords.begin(), v.coords.end(), [](int m) { return m < 0; });
    if (it == v.coords.end()) break;
    const int j = static_cast<int>(it - v.coords.begin());
    v = reflect_weight(rs, j, std::move(v));
    w = wa.simple_reflection(j) * w;
    word.insert(word.begin(), j);
  }
  return {std::move(v), std::move(w), std::move(word)};
}

/// Dominant only; skips tracking the group element.
inline Weight dominant_weight(const RootSystem& rs, Weight v) {
  for (;;) {
    auto it = std::find_if(v.coords.begin(), v.coords.end(), [](int m) { return m < 0; });
    if (it == v.coords.end()) return v;
    const int j = static_cast<int>(it - v.coords.begin());
    v = reflect_weight(rs, j, std::move(v));
  }
}

inline Weight sigma(const WeylAction& wa, const RootSet& s) {
  return dominant_weight(wa.roots(), sum_vector(wa.roots(), s));
}

/// {alpha in Phi : (alpha, beta) >= r for all beta in s}.
inline RootSet threshold_set(const RootSystem& rs, const RootSet& s, Rational r = Rational(-1)) {
  RootSet out;
  for (int a = 0; a < rs.size(); ++a) {
    bool ok = true;
    s.for_each([&](int b) { ok = ok && Rational(rs.form(a, b)) >= r; });
    if (ok) out.insert(a);
  }
  return out;
}

inline Weight delta(const WeylAction& wa, const RootSet& s, Rational r = Rational(-1)) {
  return sigma(wa, threshold_set(wa.roots(), s, r));
}

using GramKey = std::vector<std::vector<int>>;

/// Gram matrix of s with each row sorted, rows in lexicographic order.
inline GramKey gram_key(const RootSystem& rs, const RootSet& s) {
  const auto idx = s.indices();
  GramKey m(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) m[a][b] = rs.form(idx[a], idx[b]);
    std::sort(m[a].begin(), m[a].end());
  }
  std::sort(m.begin(), m.end());
  return m;
}

/// Conjugacy invariant used to bucket closed sets before conjugacy tests.
struct InvariantKey {
  int size = 0;
  Weight sigma;
  Weight delta;
  GramKey gram;

  friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
};

inline InvariantKey invariant_key(const WeylAction& wa, const RootSet& s) {
  return {s.size(), sigma(wa, s), delta(wa, s), gram_key(wa.roots(), s)};
}

/// Stabilizer of a weight: conjugate of the parabolic subgroup generated by
/// the simple reflections at the zero coordinates of its dominant conjugate.
inline PermGroup weight_stabilizer(const WeylAction& wa, const Weight& v) {
  auto dom = dominant_conjugate(wa, v);
  const Perm winv = dom.element.inverse();
  std::vector<Perm> gens;
  for (int i = 0; i < wa.rank(); ++i)
    if (dom.weight.coords[i] == 0) gens.push_back(winv * wa.simple_reflection(i) * dom.element);
  return PermGroup(wa.roots().size(), std::move(gens));
}

/// Setwise stabilizer W_T, searched inside the stabilizer of the sum vector.
inline PermGroup stabilizer_of_closed_set(const WeylAction& wa, const RootSet& t) {
  PermGroup seed = weight_stabilizer(wa, sum_vector(wa.roots(), t));
  const auto& gens = seed.generators();
  if (std::all_of(gens.begin(), gens.end(), [&](const Perm& g) { return g.fixes_set(t); })) return seed;
  return seed.set_stabilizer(t);
}

/// Expresses w as a word in simple reflections (0-based indices, w = s_{word[0]} s_{word[1]} ...).
inline std::vector<int> reflection_word(const WeylAction& wa, Perm w) {
  const RootSystem& rs = wa.roots();
  std::vector<int> word;
  while (!w.is_identity()) {
    int j = 0;
    while (j < rs.rank() && rs.is_positive(w(j))) ++j;
    if (j == rs.rank()) throw Error("permutation is not a Weyl group element");
    // w = (w s_j) s_j with l(w s_j) = l(w) - 1
    word.insert(word.begin(), j);
    w = w * wa.simple_reflection(j);
  }
  return word;
}

}  // namespace rootclosed
