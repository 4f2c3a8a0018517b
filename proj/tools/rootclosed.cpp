// rootclosed: classify closed root subsets up to Weyl group conjugacy.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rootclosed.hpp"

namespace {

using namespace rootclosed;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

struct SystemArgs {
  std::string family;
  int rank = 0;

  RootSystemType type() const {
    if (family.size() != 1) throw UsageError("--type must be one letter A..G");
    RootSystemType t;
    try {
      t = RootSystemType::parse(family + std::to_string(rank));
      validate(t);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return t;
  }
};

void add_system_options(CLI::App* app, SystemArgs& a) {
  app->add_option("--type", a.family, "Root system family")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}, CLI::ignore_case));
  app->add_option("--rank", a.rank, "Rank")->required()->check(CLI::PositiveNumber);
}

std::set<ClassKind> parse_kinds(const std::string& s) {
  std::set<ClassKind> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.insert(parse_kind(item));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("--kinds is empty");
  return out;
}

std::string summary_line(const ClassCounts& c, std::chrono::milliseconds elapsed) {
  std::ostringstream os;
  os << "special=" << c.special << " mixed=" << c.mixed << " symmetric=" << c.symmetric << " total=" << c.total
     << " elapsed_ms=" << elapsed.count();
  return os.str();
}

// Records go to --out ("-" for stdout); the summary line goes to stdout, or
// to stderr when stdout carries the records.
struct ClassifyArgs {
  SystemArgs sys;
  std::string kinds = "special,symmetric,mixed";
  std::string format = "jsonl";
  std::string out;
  int jobs = 1;
};

int cmd_classify(const ClassifyArgs& a) {
  const RootSystemType t = a.sys.type();
  const auto kinds = parse_kinds(a.kinds);
  const WeylAction wa = weyl_group(t);
  const ClassificationResult res = classify_all(wa, {a.jobs});

  auto emit = [&](std::ostream& os) {
    if (a.format == "csv")
      write_counts_csv(os, t, res.counts());
    else
      write_jsonl(os, wa.roots(), res, kinds);
    os.flush();
    if (!os) throw IoError("write failed");
  };
  const std::string summary = summary_line(res.counts(), res.elapsed);
  if (a.out == "-") {
    emit(std::cout);
    std::cerr << summary << '\n';
    return kExitOk;
  }
  if (!a.out.empty()) {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw IoError("cannot open '" + a.out + "' for writing");
    emit(f);
  }
  std::cout << summary << '\n';
  return kExitOk;
}

std::string counts_text(const ClassCounts& c) {
  std::ostringstream os;
  os << '(' << c.special << ',' << c.mixed << ',' << c.symmetric << ',' << c.total << ')';
  return os.str();
}

int cmd_verify(const std::string& level_name, int jobs) {
  VerifyLevel level;
  try {
    level = parse_verify_level(level_name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& row : golden_rows_for(level)) {
    const WeylAction wa = weyl_group(row.type);
    const ClassificationResult res = classify_all(wa, {jobs});
    const ClassCounts got = res.counts();
    const bool match = got == row.counts;
    std::cout << row.type.name() << ' ' << counts_text(got) << (match ? " ok" : " MISMATCH expected " + counts_text(row.counts))
              << " elapsed_ms=" << res.elapsed.count() << '\n';
    ok = ok && match;
    if (wa.roots().size() <= kBruteForceMaxRoots) {
      const bool same = same_classification(wa, res, brute_force_classify(wa));
      std::cout << row.type.name() << " brute-force oracle " << (same ? "ok" : "MISMATCH") << '\n';
      ok = ok && same;
    }
  }
  std::cout << (ok ? "verify: all rows match" : "verify: mismatches found") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

int cmd_topo(int n, bool t0, int jobs) {
  if (n < 1 || n > kTopologyMaxPoints)
    throw UsageError("--n must be between 1 and " + std::to_string(kTopologyMaxPoints));
  const TopologyCounts c = count_topologies(n, t0, {jobs});
  std::cout << "labeled=" << c.labeled << " classes=" << c.classes << '\n';
  return kExitOk;
}

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int j : word) s += (s.empty() ? "s" : " s") + std::to_string(j + 1);
  return s;
}

int cmd_stabilizer(const SystemArgs& sys, const std::string& spec) {
  const WeylAction wa = weyl_group(sys.type());
  const RootSystem& rs = wa.roots();
  RootSet s;
  try {
    s = parse_set(rs, spec);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (auto bad = closedness_violation(rs, s)) {
    const int sum = rs.sum_index(bad->first, bad->second);
    throw UsageError("set is not closed: " + format_root(rs, bad->first) + " + " + format_root(rs, bad->second) +
                     " = " + format_root(rs, sum) + " is missing");
  }
  const PermGroup stab = stabilizer_of_closed_set(wa, s);
  std::cout << "order=" << stab.order() << '\n';
  for (const Perm& g : stab.generators()) {
    std::cout << "generator word=" << word_text(reflection_word(wa, g)) << " images=[";
    const auto& img = g.images();
    for (std::size_t i = 0; i < img.size(); ++i) std::cout << (i ? "," : "") << img[i];
    std::cout << "]\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed subsets of root systems up to Weyl group conjugacy"};
  app.require_subcommand(1);
  unsigned long long seed = 0;
  app.add_option("--seed", seed, "Sampling seed (never affects results)");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Enumerate classes of closed sets");
  add_system_options(classify, ca.sys);
  classify->add_option("--kinds", ca.kinds, "Comma-separated subset of special,symmetric,mixed");
  classify->add_option("--format", ca.format, "Output format")->check(CLI::IsMember({"jsonl", "csv"}));
  classify->add_option("--out", ca.out, "Output path, '-' for stdout");
  classify->add_option("--jobs", ca.jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--seed", seed);

  std::string level = "fast";
  int verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "Compare counts with the embedded golden table");
  verify->add_option("--level", level, "fast | full | extended");
  verify->add_option("--jobs", verify_jobs)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);

  int n = 0;
  bool t0 = false;
  int topo_jobs = 1;
  auto* topo = app.add_subcommand("topo", "Count topologies on n points");
  topo->add_option("--n", n, "Number of points")->required();
  topo->add_flag("--t0", t0, "Count T0 topologies only");
  topo->add_option("--jobs", topo_jobs)->check(CLI::PositiveNumber);

  SystemArgs stab_sys;
  std::string set_spec;
  auto* stabilizer = app.add_subcommand("stabilizer", "Setwise stabilizer of a closed set");
  add_system_options(stabilizer, stab_sys);
  stabilizer->add_option("--set", set_spec, "Roots such as \"a1+2a2,-a3\", or Phi / Phi+")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(ca);
    if (*verify) return cmd_verify(level, verify_jobs);
    if (*topo) return cmd_topo(n, t0, topo_jobs);
    if (*stabilizer) return cmd_stabilizer(stab_sys, set_spec);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
