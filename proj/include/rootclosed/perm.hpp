#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootclosed/error.hpp"
#include "rootclosed/rootset.hpp"

namespace rootclosed {

/// Bijection of {0, ..., n-1}. Composition follows function notation:
/// (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int p : images_) {
      if (p < 0 || p >= degree() || seen[p]) throw Error("malformed permutation");
      seen[p] = 1;
    }
  }

  static Perm identity(int degree) {
    Perm p;
    p.images_.resize(degree);
    for (int i = 0; i < degree; ++i) p.images_[i] = i;
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm p;
    p.images_.resize(images_.size());
    for (int i = 0; i < degree(); ++i) p.images_[images_[i]] = i;
    return p;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm p;
    p.images_.resize(b.images_.size());
    for (std::size_t i = 0; i < b.images_.size(); ++i) p.images_[i] = a.images_[b.images_[i]];
    return p;
  }

  RootSet image(const RootSet& s) const {
    RootSet out;
    s.for_each([&](int i) { out.insert(images_[i]); });
    return out;
  }
  bool fixes_set(const RootSet& s) const {
    bool ok = true;
    s.for_each([&](int i) { ok = ok && s.contains(images_[i]); });
    return ok;
  }

  /// Smallest moved point, or -1 for the identity.
  int first_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return i;
    return -1;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// Element-iteration cap; ROOTCLOSED_ELEMENT_CAP overrides the default 10^6.
inline std::uint64_t element_cap() {
  if (const char* env = std::getenv("ROOTCLOSED_ELEMENT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

/// Permutation group given by generators. The stabilizer chain is built by
/// deterministic Schreier-Sims on first use (thread-safe); copies share it.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}

  PermGroup(int degree, std::vector<Perm> gens) : state_(std::make_shared<State>()) {
    state_->degree = degree;
    for (auto& g : gens) {
      if (g.degree() != degree) throw Error("generator degree mismatch");
      if (!g.is_identity() && std::find(state_->gens.begin(), state_->gens.end(), g) == state_->gens.end())
        state_->gens.push_back(std::move(g));
    }
  }

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return state_->degree; }
  const std::vector<Perm>& generators() const { return state_->gens; }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& lv : chain().levels) n *= lv.orbit.size();
    return n;
  }

  std::vector<int> base() const {
    std::vector<int> b;
    for (const auto& lv : chain().levels) b.push_back(lv.base);
    return b;
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree()) return false;
    return sift(g).first.is_identity();
  }

  /// Orbit of p under the generators, sorted ascending.
  std::vector<int> orbit(int p) const {
    std::vector<int> orb{p};
    std::vector<char> seen(degree(), 0);
    seen[p] = 1;
    for (std::size_t q = 0; q < orb.size(); ++q)
      for (const auto& g : generators()) {
        const int x = g(orb[q]);
        if (!seen[x]) {
          seen[x] = 1;
          orb.push_back(x);
        }
      }
    std::sort(orb.begin(), orb.end());
    return orb;
  }

  /// Orbits through the given points; blocks are sorted and ordered by their
  /// minimum element (the representative).
  std::vector<std::vector<int>> orbits(std::span<const int> points) const {
    std::vector<std::vector<int>> out;
    std::vector<char> done(degree(), 0);
    std::vector<int> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    for (int p : pts) {
      if (done[p]) continue;
      auto orb = orbit(p);
      for (int x : orb) done[x] = 1;
      out.push_back(std::move(orb));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
  }

  /// Calls f on every element (identity first) until f returns false.
  /// Returns false iff f stopped the iteration.
  template <class F>
  bool for_each_element(F&& f) const {
    const auto& lv = chain().levels;
    Perm id = Perm::identity(degree());
    return for_each_rec(lv, 0, id, f);
  }

  std::vector<Perm> elements(std::uint64_t cap = element_cap()) const {
    if (order() > cap)
      throw Error("group order " + std::to_string(order()) + " exceeds element cap " + std::to_string(cap));
    std::vector<Perm> out;
    out.reserve(order());
    for_each_element([&](const Perm& g) {
      out.push_back(g);
      return true;
    });
    return out;
  }

  /// Some g with g(s1) = s2, or nullopt.
  std::optional<Perm> transporter(const RootSet& s1, const RootSet& s2) const {
    if (s1.size() != s2.size()) return std::nullopt;
    std::optional<Perm> found;
    backtrack(s1, s2, [&](const Perm& g) {
      found = g;
      return false;
    });
    return found;
  }

  /// {g in G : g(s) = s}.
  PermGroup set_stabilizer(const RootSet& s) const {
    PermGroup k = trivial(degree());
    backtrack(s, s, [&](const Perm& g) {
      if (!k.contains(g)) {
        auto gens = k.generators();
        gens.push_back(g);
        k = PermGroup(degree(), std::move(gens));
        if (k.order() == order()) return false;
      }
      return true;
    });
    return k;
  }

 private:
  struct Level {
    int base = 0;
    std::vector<Perm> gens;     // strong generators fixing earlier base points
    std::vector<int> orbit;     // orbit of base; orbit[0] == base
    std::vector<int> where;     // point -> position in orbit, or -1
    std::vector<Perm> u;        // u[k](base) == orbit[k]
    std::vector<Perm> uinv;
    std::vector<int> newly_fixed;  // fixed by the next level's group but not by this one
  };
  struct Chain {
    std::vector<Level> levels;
    std::vector<int> fixed_by_all;  // points fixed by the whole group
  };
  struct State {
    int degree = 0;
    std::vector<Perm> gens;
    std::once_flag once;
    Chain chain;
  };

  const Chain& chain() const {
    std::call_once(state_->once, [this] { state_->chain = build_chain(); });
    return state_->chain;
  }

  void compute_orbit(Level& lv) const {
    const int n = degree();
    lv.orbit.assign(1, lv.base);
    lv.where.assign(n, -1);
    lv.where[lv.base] = 0;
    lv.u.assign(1, Perm::identity(n));
    lv.uinv.assign(1, Perm::identity(n));
    for (std::size_t q = 0; q < lv.orbit.size(); ++q) {
      for (const auto& g : lv.gens) {
        const int x = g(lv.orbit[q]);
        if (lv.where[x] < 0) {
          lv.where[x] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(x);
          lv.u.push_back(g * lv.u[q]);
          lv.uinv.push_back(lv.u.back().inverse());
        }
      }
    }
  }

  // Sifts g from level `from`; returns the residue and the level where it dropped out
  // (levels.size() when it passed through all of them).
  static std::pair<Perm, std::size_t> sift_in(const std::vector<Level>& levels, Perm g, std::size_t from) {
    for (std::size_t i = from; i < levels.size(); ++i) {
      const int x = g(levels[i].base);
      const int k = levels[i].where[x];
      if (k < 0) return {std::move(g), i};
      g = levels[i].uinv[k] * g;
    }
    return {std::move(g), levels.size()};
  }

  std::pair<Perm, std::size_t> sift(const Perm& g) const { return sift_in(chain().levels, g, 0); }

  Chain build_chain() const {
    const int n = degree();
    Chain c;
    std::vector<Level>& lv = c.levels;
    auto base_fixed = [&](const Perm& g) {
      for (const auto& l : lv)
        if (g(l.base) != l.base) return false;
      return true;
    };
    for (const auto& g : generators()) {
      if (base_fixed(g)) {
        Level l;
        l.base = g.first_moved();
        lv.push_back(std::move(l));
      }
    }
    for (std::size_t i = 0; i < lv.size(); ++i) {
      for (const auto& g : generators()) {
        bool fixes = true;
        for (std::size_t j = 0; j < i; ++j) fixes = fixes && g(lv[j].base) == lv[j].base;
        if (fixes) lv[i].gens.push_back(g);
      }
      compute_orbit(lv[i]);
    }

    std::size_t i = lv.size();
    while (i >= 1) {
      const std::size_t li = i - 1;
      bool restarted = false;
      for (std::size_t q = 0; q < lv[li].orbit.size() && !restarted; ++q) {
        for (std::size_t s = 0; s < lv[li].gens.size() && !restarted; ++s) {
          const Perm& x = lv[li].gens[s];
          const int img = x(lv[li].orbit[q]);
          Perm xu = x * lv[li].u[q];
          if (xu == lv[li].u[lv[li].where[img]]) continue;
          Perm h = lv[li].uinv[lv[li].where[img]] * xu;
          auto [y, j] = sift_in(lv, std::move(h), li + 1);
          if (y.is_identity()) continue;
          if (j == lv.size()) {
            Level l;
            l.base = y.first_moved();
            lv.push_back(std::move(l));
          }
          for (std::size_t l = li + 1; l <= j; ++l) {
            lv[l].gens.push_back(y);
            compute_orbit(lv[l]);
          }
          i = j + 1;
          restarted = true;
        }
      }
      if (!restarted) --i;
    }

    // Fixed-point sets used to prune backtracking.
    std::vector<char> fixed_prev(n, 1);
    for (const auto& g : generators())
      for (int p = 0; p < n; ++p)
        if (g(p) != p) fixed_prev[p] = 0;
    for (int p = 0; p < n; ++p)
      if (fixed_prev[p]) c.fixed_by_all.push_back(p);
    for (std::size_t l = 0; l < lv.size(); ++l) {
      std::vector<char> fixed_next(n, 1);
      if (l + 1 < lv.size())
        for (const auto& g : lv[l + 1].gens)
          for (int p = 0; p < n; ++p)
            if (g(p) != p) fixed_next[p] = 0;
      for (int p = 0; p < n; ++p)
        if (fixed_next[p] && !fixed_prev[p]) lv[l].newly_fixed.push_back(p);
      fixed_prev = std::move(fixed_next);
    }
    return c;
  }

  template <class F>
  static bool for_each_rec(const std::vector<Level>& lv, std::size_t i, const Perm& h, F& f) {
    if (i == lv.size()) return f(h);
    for (const auto& u : lv[i].u)
      if (!for_each_rec(lv, i + 1, h * u, f)) return false;
    return true;
  }

  // Depth-first search over g = u_1 * u_2 * ... * u_k with g(s1) = s2. Points
  // whose image is already determined by the prefix are checked at each level.
  template <class F>
  void backtrack(const RootSet& s1, const RootSet& s2, F&& on_found) const {
    const Chain& c = chain();
    for (int p : c.fixed_by_all)
      if (s1.contains(p) != s2.contains(p)) return;
    Perm id = Perm::identity(degree());
    backtrack_rec(c.levels, 0, id, s1, s2, on_found);
  }

  template <class F>
  static bool backtrack_rec(const std::vector<Level>& lv, std::size_t i, const Perm& h, const RootSet& s1,
                            const RootSet& s2, F& on_found) {
    if (i == lv.size()) return on_found(h);
    const Level& L = lv[i];
    for (const auto& u : L.u) {
      Perm g = h * u;
      bool ok = true;
      for (int p : L.newly_fixed)
        if (s1.contains(p) != s2.contains(g(p))) {
          ok = false;
          break;
        }
      if (ok && !backtrack_rec(lv, i + 1, g, s1, s2, on_found)) return false;
    }
    return true;
  }

  std::shared_ptr<State> state_;
};

}  // namespace rootclosed
