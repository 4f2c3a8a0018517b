#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootclosed/error.hpp"
#include "rootclosed/perm.hpp"
#include "rootclosed/weyl.hpp"

namespace rootclosed {

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;  // row-major

inline RatMatrix identity_matrix(int n) {
  RatMatrix m(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, RatVec(p, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].numerator() == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

inline RatVec operator*(const RatMatrix& a, const RatVec& v) {
  RatVec out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

/// Reduced row-echelon form with zero rows dropped.
inline RatMatrix rref(RatMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].numerator() == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].numerator() == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

inline int matrix_rank(const RatMatrix& m) { return static_cast<int>(rref(m).size()); }

inline bool span_equal(const RatMatrix& a, const RatMatrix& b) { return rref(a) == rref(b); }

inline bool in_span(const RatMatrix& basis, const RatVec& v) {
  RatMatrix ext = basis;
  ext.push_back(v);
  return matrix_rank(ext) == matrix_rank(basis);
}

/// Subspace of the Cartan subalgebra, in coordinates over the simple coroots.
class ToralSubspace {
 public:
  ToralSubspace() = default;
  ToralSubspace(int rank, RatMatrix basis) : rank_(rank), basis_(std::move(basis)) {
    for (const auto& v : basis_)
      if (static_cast<int>(v.size()) != rank_) throw Error("toral subspace: vector length differs from rank");
    if (matrix_rank(basis_) != static_cast<int>(basis_.size()))
      throw Error("toral subspace: basis is linearly dependent");
  }

  static ToralSubspace from_integers(int rank, const std::vector<std::vector<long long>>& rows) {
    RatMatrix m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return ToralSubspace(rank, std::move(m));
  }

  int rank() const { return rank_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const RatMatrix& basis() const { return basis_; }
  RatMatrix canonical() const { return rref(basis_); }

  ToralSubspace transformed(const RatMatrix& a) const {
    RatMatrix out;
    for (const auto& v : basis_) out.push_back(a * v);
    return ToralSubspace(rank_, std::move(out));
  }

  friend bool operator==(const ToralSubspace& x, const ToralSubspace& y) {
    return x.rank_ == y.rank_ && span_equal(x.basis_, y.basis_);
  }

 private:
  int rank_ = 0;
  RatMatrix basis_;
};

inline RatVec coroot_vector(const RootSystem& rs, int root) {
  const auto& c = rs.coroot_coords(root);
  return RatVec(c.begin(), c.end());
}

/// Coroots of the roots alpha with both alpha and -alpha in t.
inline RatMatrix required_coroots(const RootSystem& rs, const RootSet& t) {
  RatMatrix out;
  t.for_each([&](int a) {
    if (rs.is_positive(a) && t.contains(rs.neg(a))) out.push_back(coroot_vector(rs, a));
  });
  return out;
}

inline bool is_valid_toral(const RootSystem& rs, const RootSet& t, const ToralSubspace& sub) {
  if (sub.rank() != rs.rank()) return false;
  for (const auto& v : required_coroots(rs, t))
    if (!in_span(sub.basis(), v)) return false;
  return true;
}

/// Matrix of w on coroot coordinates: column i holds w(alpha_i^vee).
inline RatMatrix weyl_cartan_matrix(const WeylAction& wa, const Perm& w) {
  const RootSystem& rs = wa.roots();
  const int l = rs.rank();
  RatMatrix m(l, RatVec(l, Rational(0)));
  for (int i = 0; i < l; ++i) {
    const auto& c = rs.coroot_coords(w(i));
    for (int k = 0; k < l; ++k) m[k][i] = c[k];
  }
  return m;
}

/// A w in the stabilizer of t with w(t1) = t2, scanning W_T identity first.
inline std::optional<Perm> toral_conjugate(const WeylAction& wa, const RootSet& t, const ToralSubspace& t1,
                                           const ToralSubspace& t2) {
  const RootSystem& rs = wa.roots();
  if (!is_valid_toral(rs, t, t1) || !is_valid_toral(rs, t, t2))
    throw Error("toral_conjugate: subspace does not contain the required coroots");
  if (t1.dim() != t2.dim()) return std::nullopt;
  const PermGroup stab = stabilizer_of_closed_set(wa, t);
  if (stab.order() > element_cap())
    throw Error("toral_conjugate: stabilizer order " + std::to_string(stab.order()) + " exceeds element cap");
  const RatMatrix target = t2.canonical();
  std::optional<Perm> found;
  stab.for_each_element([&](const Perm& g) {
    if (found) return false;
    if (rref(t1.transformed(weyl_cartan_matrix(wa, g)).basis()) == target) found = g;
    return !found;
  });
  return found;
}

}  // namespace rootclosed
