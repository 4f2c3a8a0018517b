#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "rootclosed/closed.hpp"
#include "rootclosed/dedupe.hpp"
#include "rootclosed/perm.hpp"
#include "rootclosed/weyl.hpp"

namespace rootclosed {

/// Smallest root subsystem containing gens: closure under the reflections s_g.
inline RootSet generated_subsystem(const RootSystem& rs, const std::vector<int>& gens) {
  RootSet out;
  std::vector<int> queue;
  for (int g : gens)
    if (!out.contains(g)) {
      out.insert(g);
      queue.push_back(g);
    }
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int g : gens) {
      const int x = rs.reflect(queue[q], g);
      if (!out.contains(x)) {
        out.insert(x);
        queue.push_back(x);
      }
    }
  return out;
}

/// Simple system of a symmetric closed set with respect to the ambient
/// positive roots: its positive members that are not a sum of two of them.
inline std::vector<int> simple_system(const RootSystem& rs, const RootSet& p) {
  const RootSet pos = p & rs.positive();
  const RootSet decomposable = sum_set(rs, pos);
  return (pos - decomposable).indices();
}

/// Irreducible components of a simple system (connected by nonzero form).
inline std::vector<std::vector<int>> components(const RootSystem& rs, const std::vector<int>& simple) {
  std::vector<std::vector<int>> out;
  std::vector<char> done(simple.size(), 0);
  for (std::size_t s = 0; s < simple.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> stack{s};
    done[s] = 1;
    std::vector<int> comp;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      comp.push_back(simple[a]);
      for (std::size_t b = 0; b < simple.size(); ++b)
        if (!done[b] && rs.form(simple[a], simple[b]) != 0) {
          done[b] = 1;
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Highest root of the irreducible subsystem spanned by a connected simple system.
inline int highest_root(const RootSystem& rs, const std::vector<int>& component) {
  const RootSet sub = generated_subsystem(rs, component);
  int best = -1;
  sub.for_each([&](int i) {
    if (best < 0 || rs.height(i) > rs.height(best)) best = i;
  });
  return best;
}

/// Representatives of the nonempty closed root subsystems of `ambient` (a
/// symmetric closed set) up to conjugacy under `group`, found by
/// Borel-de Siebenthal moves: drop a simple root, or replace one component
/// by its extended diagram minus one node.
inline std::vector<RootSet> closed_subsystems(const WeylAction& wa, const RootSet& ambient, const PermGroup& group) {
  const RootSystem& rs = wa.roots();
  ConjugacyBuckets classes;
  std::deque<std::size_t> work;
  auto conj = [&](const RootSet& a, const RootSet& b) { return group.transporter(a, b).has_value(); };
  auto offer = [&](const RootSet& p) {
    if (p.empty() || !is_closed(rs, p)) return;
    auto ins = classes.insert(invariant_key(wa, p), p, conj);
    if (ins.is_new) work.push_back(ins.index);
  };
  offer(ambient);
  while (!work.empty()) {
    const RootSet p = classes.reps()[work.front()];
    work.pop_front();
    const auto simple = simple_system(rs, p);
    for (std::size_t d = 0; d < simple.size(); ++d) {
      std::vector<int> gens;
      for (std::size_t k = 0; k < simple.size(); ++k)
        if (k != d) gens.push_back(simple[k]);
      offer(generated_subsystem(rs, gens));
    }
    for (const auto& comp : components(rs, simple)) {
      const int lowest = rs.neg(highest_root(rs, comp));
      for (int drop : comp) {
        std::vector<int> gens{lowest};
        for (int s : simple)
          if (s != drop) gens.push_back(s);
        offer(generated_subsystem(rs, gens));
      }
    }
  }
  return classes.reps();
}

}  // namespace rootclosed
