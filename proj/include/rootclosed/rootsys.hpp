#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rootclosed/error.hpp"
#include "rootclosed/rootset.hpp"

namespace rootclosed {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

  /// Parses "B3", "e6", ...
  static RootSystemType parse(const std::string& s) {
    if (s.size() < 2) throw Error("invalid root system type '" + s + "'");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G') throw Error("invalid root system family '" + s + "'");
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw Error("invalid rank in '" + s + "'");
      rank = rank * 10 + (s[i] - '0');
      if (rank > 1000) throw Error("rank too large in '" + s + "'");
    }
    return {static_cast<Family>(c - 'A'), rank};
  }

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

/// Known number of roots for a validated type.
inline int root_count(const RootSystemType& t) {
  const int r = t.rank;
  switch (t.family) {
    case Family::A: return r * (r + 1);
    case Family::B:
    case Family::C: return 2 * r * r;
    case Family::D: return 2 * r * (r - 1);
    case Family::E: return r == 6 ? 72 : r == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

/// Throws Error unless (family, rank) names an irreducible crystallographic
/// root system. D3 is rejected (use A3).
inline void validate(const RootSystemType& t) {
  const int r = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B:
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) {
    std::string msg = "invalid root system type " + t.name();
    if (t.family == Family::D && r == 3) msg += " (D3 is rejected; use A3)";
    throw Error(msg);
  }
  if (root_count(t) > RootSet::kCapacity)
    throw Error("root system " + t.name() + " exceeds the supported number of roots");
}

/// Element of the weight lattice in fundamental-weight coordinates.
struct Weight {
  std::vector<int> coords;

  bool dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](int m) { return m >= 0; });
  }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int m) { return m == 0; });
  }
  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a) {
    for (int& m : a.coords) m = -m;
    return a;
  }

  // Lexicographic on coordinates.
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;
};

using Coords = std::vector<int>;

/// Immutable table describing an irreducible root system: roots over the
/// simple-root basis, negation, addition table, Cartan matrix, and the
/// symmetric form normalized so short roots have squared length 2.
///
/// Index layout: positive roots first, ordered by height, then by descending
/// lexicographic coordinates (so alpha_k has index k-1); the negative of root
/// i < N/2 is i + N/2.
class RootSystem {
 public:
  static constexpr int kNotARoot = -1;

  static RootSystem build(const RootSystemType& t) {
    validate(t);
    RootSystem rs;
    rs.type_ = t;
    rs.rank_ = t.rank;
    rs.simple_form_ = simple_form(t);
    const int l = t.rank;
    rs.cartan_.assign(l, std::vector<int>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        rs.cartan_[i][j] = 2 * rs.simple_form_[i][j] / rs.simple_form_[i][i];
    rs.generate_roots();
    rs.build_tables();
    return rs;
  }

  const RootSystemType& type() const { return type_; }
  int rank() const { return rank_; }
  /// Total number of roots N.
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return size() / 2; }

  const Coords& coords(int i) const { return roots_[i]; }
  int neg(int i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  bool is_positive(int i) const { return i < num_positive(); }
  int height(int i) const { return heights_[i]; }

  /// Index of alpha_i + alpha_j, or nullopt when the sum is not a root.
  std::optional<int> add(int i, int j) const {
    const int k = addtab_[static_cast<std::size_t>(i) * size() + j];
    if (k == kNotARoot) return std::nullopt;
    return k;
  }
  /// Raw addition-table entry (kNotARoot when the sum is not a root).
  int sum_index(int i, int j) const { return addtab_[static_cast<std::size_t>(i) * size() + j]; }
  /// Roots j such that alpha_i + alpha_j is a root.
  const RootSet& addable(int i) const { return addable_[i]; }

  /// (alpha_i, alpha_j), short roots normalized to squared length 2.
  int form(int i, int j) const { return form_[static_cast<std::size_t>(i) * size() + j]; }
  /// <alpha_j, alpha_i^vee> for simple roots.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<int>>& simple_form_matrix() const { return simple_form_; }

  std::optional<int> find(const Coords& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int simple(int k) const { return k; }

  /// Weight coordinates m_j = <alpha, alpha_j^vee>.
  const Weight& root_to_weight(int i) const { return weights_[i]; }

  /// Index of s_{alpha_j}(alpha_i) for arbitrary roots i, j.
  int reflect(int i, int j) const { return reflect_[static_cast<std::size_t>(j) * size() + i]; }

  /// alpha_i^vee over the simple coroots (integer coefficients).
  const Coords& coroot_coords(int i) const { return coroots_[i]; }

  RootSet all() const { return RootSet::range(0, size()); }
  RootSet positive() const { return RootSet::range(0, num_positive()); }

  RootSet negate(const RootSet& s) const {
    RootSet out;
    s.for_each([&](int i) { out.insert(neg(i)); });
    return out;
  }

 private:
  RootSystem() = default;

  static std::vector<std::vector<int>> simple_form(const RootSystemType& t) {
    const int l = t.rank;
    std::vector<std::vector<int>> b(l, std::vector<int>(l, 0));
    auto link = [&](int i, int j, int v) { b[i][j] = b[j][i] = v; };
    switch (t.family) {
      case Family::A:
        for (int i = 0; i < l; ++i) b[i][i] = 2;
        for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -1);
        break;
      case Family::B:  // alpha_l short
        for (int i = 0; i + 1 < l; ++i) b[i][i] = 4;
        b[l - 1][l - 1] = 2;
        for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -2);
        break;
      case Family::C:  // alpha_l long
        for (int i = 0; i + 1 < l; ++i) b[i][i] = 2;
        b[l - 1][l - 1] = 4;
        for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1);
        link(l - 2, l - 1, -2);
        break;
      case Family::D:
        for (int i = 0; i < l; ++i) b[i][i] = 2;
        for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1);
        link(l - 3, l - 1, -1);
        break;
      case Family::E:  // Bourbaki: 1-3-4-5-6(-7-8), 2-4
        for (int i = 0; i < l; ++i) b[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < l; ++i) link(i, i + 1, -1);
        break;
      case Family::F:  // alpha_1, alpha_2 long
        b[0][0] = b[1][1] = 4;
        b[2][2] = b[3][3] = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
      case Family::G:  // alpha_1 short
        b[0][0] = 2;
        b[1][1] = 6;
        link(0, 1, -3);
        break;
    }
    return b;
  }

  // <beta, alpha_j^vee> for beta in simple-root coordinates.
  int pairing(const Coords& beta, int j) const {
    int s = 0;
    for (int k = 0; k < rank_; ++k) s += beta[k] * cartan_[j][k];
    return s;
  }

  void generate_roots() {
    const int l = rank_;
    std::map<Coords, bool> seen;
    std::vector<Coords> queue;
    for (int k = 0; k < l; ++k) {
      Coords c(l, 0);
      c[k] = 1;
      seen[c] = true;
      queue.push_back(c);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (int j = 0; j < l; ++j) {
        Coords c = queue[q];
        c[j] -= pairing(queue[q], j);
        if (!seen.count(c)) {
          seen[c] = true;
          queue.push_back(c);
        }
      }
    }
    std::vector<Coords> pos;
    for (auto& [c, _] : seen)
      if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) pos.push_back(c);
    auto ht = [](const Coords& c) { return std::accumulate(c.begin(), c.end(), 0); };
    std::sort(pos.begin(), pos.end(), [&](const Coords& a, const Coords& b) {
      const int ha = ht(a), hb = ht(b);
      if (ha != hb) return ha < hb;
      return a > b;
    });
    roots_ = pos;
    for (const auto& c : pos) {
      Coords n = c;
      for (int& x : n) x = -x;
      roots_.push_back(n);
    }
    if (static_cast<int>(roots_.size()) != root_count(type_) || roots_.size() != seen.size())
      throw Error("internal: root generation produced the wrong count for " + type_.name());
  }

  void build_tables() {
    const int n = size();
    const int l = rank_;
    for (int i = 0; i < n; ++i) index_[roots_[i]] = i;
    heights_.resize(n);
    for (int i = 0; i < n; ++i) heights_[i] = std::accumulate(roots_[i].begin(), roots_[i].end(), 0);

    addtab_.assign(static_cast<std::size_t>(n) * n, kNotARoot);
    addable_.assign(n, RootSet{});
    form_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Coords s(l);
        for (int k = 0; k < l; ++k) s[k] = roots_[i][k] + roots_[j][k];
        if (auto it = index_.find(s); it != index_.end()) {
          addtab_[static_cast<std::size_t>(i) * n + j] = it->second;
          addable_[i].insert(j);
        }
        int f = 0;
        for (int a = 0; a < l; ++a)
          for (int b = 0; b < l; ++b) f += roots_[i][a] * simple_form_[a][b] * roots_[j][b];
        form_[static_cast<std::size_t>(i) * n + j] = f;
      }
    }

    weights_.resize(n);
    for (int i = 0; i < n; ++i) {
      weights_[i].coords.resize(l);
      for (int j = 0; j < l; ++j) weights_[i].coords[j] = pairing(roots_[i], j);
    }

    reflect_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j) {
      const int fjj = form(j, j);
      for (int i = 0; i < n; ++i) {
        const int c = 2 * form(i, j) / fjj;
        Coords img(l);
        for (int k = 0; k < l; ++k) img[k] = roots_[i][k] - c * roots_[j][k];
        reflect_[static_cast<std::size_t>(j) * n + i] = index_.at(img);
      }
    }

    // alpha^vee = sum_k c_k (alpha_k, alpha_k) / (alpha, alpha) alpha_k^vee
    coroots_.resize(n);
    for (int i = 0; i < n; ++i) {
      coroots_[i].resize(l);
      const int fii = form(i, i);
      for (int k = 0; k < l; ++k) coroots_[i][k] = roots_[i][k] * simple_form_[k][k] / fii;
    }
  }

  RootSystemType type_;
  int rank_ = 0;
  std::vector<std::vector<int>> simple_form_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Coords> roots_;
  std::map<Coords, int> index_;
  std::vector<int> heights_;
  std::vector<int> addtab_;
  std::vector<RootSet> addable_;
  std::vector<int> form_;
  std::vector<Weight> weights_;
  std::vector<int> reflect_;
  std::vector<Coords> coroots_;
};

inline std::shared_ptr<const RootSystem> make_root_system(const RootSystemType& t) {
  return std::make_shared<const RootSystem>(RootSystem::build(t));
}

inline std::optional<int> add_roots(const RootSystem& rs, int i, int j) { return rs.add(i, j); }
inline int height(const RootSystem& rs, int i) { return rs.height(i); }
inline Weight root_to_weight(const RootSystem& rs, int i) { return rs.root_to_weight(i); }

}  // namespace rootclosed
