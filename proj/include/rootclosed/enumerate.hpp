#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "rootclosed/closed.hpp"
#include "rootclosed/dedupe.hpp"
#include "rootclosed/parallel.hpp"
#include "rootclosed/perm.hpp"
#include "rootclosed/subsystems.hpp"
#include "rootclosed/weyl.hpp"

namespace rootclosed {

enum class ClassKind { special, symmetric, mixed };

inline std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::special: return "special";
    case ClassKind::symmetric: return "symmetric";
    case ClassKind::mixed: return "mixed";
  }
  return "?";
}

inline ClassKind parse_kind(const std::string& s) {
  if (s == "special") return ClassKind::special;
  if (s == "symmetric") return ClassKind::symmetric;
  if (s == "mixed") return ClassKind::mixed;
  throw Error("unknown class kind '" + s + "'");
}

/// One W-conjugacy class of nonempty closed sets.
struct ClassRecord {
  RootSet rep;
  ClassKind kind = ClassKind::special;
  RootSet sym_part;
  RootSet spec_part;
  std::vector<Perm> stab_gens;
  std::uint64_t stab_order = 1;
  InvariantKey key;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

struct ClassCounts {
  std::size_t special = 0;
  std::size_t mixed = 0;
  std::size_t symmetric = 0;
  std::size_t total = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct EnumerationStats {
  std::size_t candidates = 0;         // successors generated
  std::size_t sigma_evaluations = 0;  // sigma(T') computed by the minimality filter
  std::size_t bucketed = 0;           // candidates passing the filter
  std::size_t conjugacy_tests = 0;
};

struct ClassificationResult {
  RootSystemType type;
  std::vector<ClassRecord> special;
  std::vector<ClassRecord> mixed;
  std::vector<ClassRecord> symmetric;
  std::chrono::milliseconds elapsed{0};
  EnumerationStats stats;

  ClassCounts counts() const {
    return {special.size(), mixed.size(), symmetric.size(), special.size() + mixed.size() + symmetric.size()};
  }
};

struct EnumerateOptions {
  int jobs = 1;
};

inline ClassKind kind_of(const Parts& p) {
  if (p.sym.empty()) return ClassKind::special;
  if (p.spec.empty()) return ClassKind::symmetric;
  return ClassKind::mixed;
}

inline ClassRecord make_record(const WeylAction& wa, const RootSet& rep, const PermGroup& stab, InvariantKey key) {
  ClassRecord r;
  r.rep = rep;
  const Parts parts = split_parts(wa.roots(), rep);
  r.kind = kind_of(parts);
  r.sym_part = parts.sym;
  r.spec_part = parts.spec;
  r.stab_gens = stab.generators();
  r.stab_order = stab.order();
  r.key = std::move(key);
  return r;
}

inline PermGroup record_stabilizer(const WeylAction& wa, const ClassRecord& r) {
  return PermGroup(wa.roots().size(), r.stab_gens);
}

/// One successor T \ {alpha} per W_T-orbit on T \ (T + T); orbit
/// representative is the minimum index.
inline std::vector<RootSet> special_successors(const WeylAction& wa, const RootSet& t, const PermGroup& stab) {
  const RootSet removable = t - sum_set(wa.roots(), t);
  const auto pts = removable.indices();
  std::vector<RootSet> out;
  for (const auto& orb : stab.orbits(pts)) {
    RootSet s = t;
    s.erase(orb.front());
    out.push_back(s);
  }
  return out;
}

/// True when sigma(parent) is minimal among sigma(S + beta) over beta in the
/// positive normalizer of S.
inline bool sigma_minimal(const WeylAction& wa, const RootSet& s, const Weight& parent_sigma,
                          std::size_t* evaluations = nullptr) {
  const RootSystem& rs = wa.roots();
  const Weight xi = sum_vector(rs, s);
  bool minimal = true;
  positive_normalizer(rs, s).for_each([&](int b) {
    if (!minimal) return;
    if (evaluations) ++*evaluations;
    if (dominant_weight(rs, xi + rs.root_to_weight(b)) < parent_sigma) minimal = false;
  });
  return minimal;
}

/// One representative (inside the positive roots) per W-class of nonempty
/// special closed sets, from Phi+ down to single roots.
inline std::vector<ClassRecord> enumerate_special(const WeylAction& wa, const EnumerateOptions& opts = {},
                                                  EnumerationStats* stats = nullptr) {
  const RootSystem& rs = wa.roots();
  const PermGroup& w = wa.group();
  std::vector<ClassRecord> all;
  std::vector<ClassRecord> level;
  {
    const RootSet top = rs.positive();
    level.push_back(make_record(wa, top, stabilizer_of_closed_set(wa, top), invariant_key(wa, top)));
  }
  EnumerationStats local;
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    if (level.front().rep.size() <= 1) break;

    struct Candidate {
      RootSet set;
      InvariantKey key;
    };
    std::vector<std::vector<Candidate>> per_parent(level.size());
    std::vector<std::size_t> generated(level.size(), 0), evaluated(level.size(), 0);
    parallel_for(level.size(), opts.jobs, [&](std::size_t p) {
      const ClassRecord& parent = level[p];
      for (const RootSet& s : special_successors(wa, parent.rep, record_stabilizer(wa, parent))) {
        ++generated[p];
        if (s.empty()) continue;
        if (!sigma_minimal(wa, s, parent.key.sigma, &evaluated[p])) continue;
        per_parent[p].push_back({s, invariant_key(wa, s)});
      }
    });

    ConjugacyBuckets buckets;
    auto conj = [&](const RootSet& a, const RootSet& b) { return w.transporter(a, b).has_value(); };
    for (std::size_t p = 0; p < level.size(); ++p) {
      local.candidates += generated[p];
      local.sigma_evaluations += evaluated[p];
      for (const auto& c : per_parent[p]) {
        ++local.bucketed;
        buckets.insert(c.key, c.set, conj);
      }
    }
    local.conjugacy_tests += buckets.tests();

    std::vector<ClassRecord> next(buckets.size());
    parallel_for(buckets.size(), opts.jobs, [&](std::size_t k) {
      const RootSet& rep = buckets.reps()[k];
      next[k] = make_record(wa, rep, stabilizer_of_closed_set(wa, rep), buckets.keys()[k]);
    });
    level = std::move(next);
  }
  if (stats) {
    stats->candidates += local.candidates;
    stats->sigma_evaluations += local.sigma_evaluations;
    stats->bucketed += local.bucketed;
    stats->conjugacy_tests += local.conjugacy_tests;
  }
  return all;
}

/// One representative per W-class of nonempty symmetric closed sets
/// (closed root subsystems).
inline std::vector<ClassRecord> enumerate_symmetric(const WeylAction& wa, const EnumerateOptions& opts = {}) {
  const auto reps = closed_subsystems(wa, wa.roots().all(), wa.group());
  std::vector<ClassRecord> out(reps.size());
  parallel_for(reps.size(), opts.jobs, [&](std::size_t k) {
    out[k] = make_record(wa, reps[k], wa.group().set_stabilizer(reps[k]), invariant_key(wa, reps[k]));
  });
  return out;
}

/// Mixed classes whose special part is the class representative `special`:
/// symmetric closed subsets P of the Lemma-5 hull, up to the hull's Weyl
/// group, joined with T and deduplicated under W_T.
inline std::vector<ClassRecord> enumerate_mixed_for(const WeylAction& wa, const ClassRecord& special) {
  const RootSystem& rs = wa.roots();
  const RootSet& t = special.rep;
  const RootSet hull = lemma5_hull(rs, t);
  if (hull.empty()) return {};

  std::vector<Perm> hull_gens;
  for (int a : simple_system(rs, hull)) hull_gens.push_back(wa.reflection(a));
  const PermGroup hull_group(rs.size(), std::move(hull_gens));
  const PermGroup stab_t = record_stabilizer(wa, special);

  constexpr std::uint64_t kDirectLimit = 4096;
  std::vector<Perm> stab_elems;
  if (stab_t.order() <= kDirectLimit) stab_elems = stab_t.elements(kDirectLimit);
  auto conj = [&](const RootSet& a, const RootSet& b) {
    if (stab_t.order() <= kDirectLimit)
      return std::any_of(stab_elems.begin(), stab_elems.end(), [&](const Perm& g) { return g.image(a) == b; });
    return stab_t.transporter(a, b).has_value();
  };

  ConjugacyBuckets buckets;
  for (const RootSet& p : closed_subsystems(wa, hull, hull_group)) {
    const RootSet r = p | t;
    buckets.insert(invariant_key(wa, r), r, conj);
  }
  std::vector<ClassRecord> out;
  for (std::size_t k = 0; k < buckets.size(); ++k) {
    const RootSet& r = buckets.reps()[k];
    out.push_back(make_record(wa, r, stab_t.set_stabilizer(r), buckets.keys()[k]));
  }
  return out;
}

inline ClassificationResult classify_all(const WeylAction& wa, const EnumerateOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  ClassificationResult res;
  res.type = wa.roots().type();
  res.special = enumerate_special(wa, opts, &res.stats);
  res.symmetric = enumerate_symmetric(wa, opts);
  std::vector<std::vector<ClassRecord>> mixed(res.special.size());
  parallel_for(res.special.size(), opts.jobs,
               [&](std::size_t k) { mixed[k] = enumerate_mixed_for(wa, res.special[k]); });
  for (auto& m : mixed) res.mixed.insert(res.mixed.end(), m.begin(), m.end());
  res.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return res;
}

}  // namespace rootclosed
