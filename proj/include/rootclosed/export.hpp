#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootclosed/enumerate.hpp"
#include "rootclosed/error.hpp"

namespace rootclosed {

using json = nlohmann::json;

namespace detail {

inline json set_to_json(const RootSystem& rs, const RootSet& s) {
  json a = json::array();
  s.for_each([&](int i) { a.push_back(rs.coords(i)); });
  return a;
}

inline RootSet set_from_json(const RootSystem& rs, const json& a) {
  RootSet s;
  for (const auto& v : a) {
    const auto idx = rs.find(v.get<Coords>());
    if (!idx) throw Error("import: " + v.dump() + " is not a root of " + rs.type().name());
    s.insert(*idx);
  }
  return s;
}

}  // namespace detail

/// One export record; `id` is the position in the run's output order.
inline json record_to_json(const RootSystem& rs, const ClassRecord& r, std::size_t id) {
  json gens = json::array();
  for (const auto& g : r.stab_gens) gens.push_back(g.images());
  return json{{"type", rs.type().name()},
              {"id", id},
              {"kind", to_string(r.kind)},
              {"roots", detail::set_to_json(rs, r.rep)},
              {"sym_part", detail::set_to_json(rs, r.sym_part)},
              {"spec_part", detail::set_to_json(rs, r.spec_part)},
              {"stabilizer_gens", gens},
              {"stabilizer_order", std::to_string(r.stab_order)},
              {"invariant_key", {{"sigma", r.key.sigma.coords}, {"delta", r.key.delta.coords}, {"gram", r.key.gram}}}};
}

inline ClassRecord record_from_json(const RootSystem& rs, const json& j) {
  ClassRecord r;
  r.kind = parse_kind(j.at("kind").get<std::string>());
  r.rep = detail::set_from_json(rs, j.at("roots"));
  r.sym_part = detail::set_from_json(rs, j.at("sym_part"));
  r.spec_part = detail::set_from_json(rs, j.at("spec_part"));
  for (const auto& g : j.at("stabilizer_gens")) {
    auto img = g.get<std::vector<int>>();
    if (static_cast<int>(img.size()) != rs.size()) throw Error("import: generator has wrong degree");
    r.stab_gens.emplace_back(std::move(img));
  }
  r.stab_order = std::stoull(j.at("stabilizer_order").get<std::string>());
  const json& k = j.at("invariant_key");
  r.key.size = r.rep.size();
  r.key.sigma.coords = k.at("sigma").get<std::vector<int>>();
  r.key.delta.coords = k.at("delta").get<std::vector<int>>();
  r.key.gram = k.at("gram").get<GramKey>();
  return r;
}

inline std::vector<const ClassRecord*> ordered_records(const ClassificationResult& res,
                                                       const std::set<ClassKind>& kinds) {
  std::vector<const ClassRecord*> out;
  for (ClassKind k : {ClassKind::special, ClassKind::mixed, ClassKind::symmetric}) {
    if (!kinds.contains(k)) continue;
    const auto& v = k == ClassKind::special ? res.special : k == ClassKind::mixed ? res.mixed : res.symmetric;
    for (const auto& r : v) out.push_back(&r);
  }
  return out;
}

inline const std::set<ClassKind>& all_kinds() {
  static const std::set<ClassKind> k{ClassKind::special, ClassKind::mixed, ClassKind::symmetric};
  return k;
}

/// JSON Lines, special then mixed then symmetric, ids counting from 0.
inline void write_jsonl(std::ostream& os, const RootSystem& rs, const ClassificationResult& res,
                        const std::set<ClassKind>& kinds = all_kinds()) {
  std::size_t id = 0;
  for (const ClassRecord* r : ordered_records(res, kinds)) os << record_to_json(rs, *r, id++).dump() << '\n';
}

inline ClassificationResult read_jsonl(std::istream& is) {
  ClassificationResult res;
  std::shared_ptr<const RootSystem> rs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error("import line " + std::to_string(lineno) + ": " + e.what());
    }
    const auto t = RootSystemType::parse(j.at("type").get<std::string>());
    if (!rs) {
      rs = make_root_system(t);
      res.type = t;
    } else if (!(t == res.type)) {
      throw Error("import line " + std::to_string(lineno) + ": mixed root system types");
    }
    ClassRecord r = record_from_json(*rs, j);
    switch (r.kind) {
      case ClassKind::special: res.special.push_back(std::move(r)); break;
      case ClassKind::mixed: res.mixed.push_back(std::move(r)); break;
      case ClassKind::symmetric: res.symmetric.push_back(std::move(r)); break;
    }
  }
  return res;
}

inline void write_counts_csv(std::ostream& os, const RootSystemType& t, const ClassCounts& c, bool header = true) {
  if (header) os << "type,special,mixed,symmetric,total\n";
  os << t.name() << ',' << c.special << ',' << c.mixed << ',' << c.symmetric << ',' << c.total << '\n';
}

}  // namespace rootclosed
