// Acceptance suite: one line per criterion, exhaustive at desk scale.
//
//   acceptance [--max-order N] [--cli PATH] [--data DIR]
//
// The default order bound is 3; 4 is the long-running tier.  The CLI path is
// needed for the byte-stability criterion and is normally injected by ctest.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pointlike/catalog.hpp"
#include "pointlike/cayley.hpp"
#include "pointlike/verify.hpp"
#include "support/oracles.hpp"

using namespace pointlike;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, double seconds) {
  if (!ok) ++failures;
  std::printf("[%s] %d %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
              seconds);
  std::fflush(stdout);
}

template <typename Fn>
void criterion(int number, const std::string& name, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    note = e.what();
    ok = false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(number, name + (note.empty() ? "" : " [" + note + "]"), ok, secs);
}

std::string run_command(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

Semigroup load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cayley(buf.str());
}

struct CertifiedCatalog {
  std::vector<CatalogEntry> entries;
  std::vector<VerificationReport> reports;
};

CertifiedCatalog certify_catalog(std::size_t max_order) {
  CertifiedCatalog c;
  c.entries = enumerate_catalog(max_order);
  for (const auto& e : c.entries) c.reports.push_back(certify(e.semigroup));
  return c;
}

bool construct_members_are(const Semigroup& s, const std::vector<Subset>& expected) {
  const auto cr = construct_er(s);
  if (!(cr.complex.members() == expected)) return false;
  // same answer from the automaton side
  const auto sd = build_stable(s, cr);
  const auto gg = build_global_group(sd, build_local_groups(s, sd));
  const auto fa = build_automaton(s, sd, gg);
  return cover_complex(s, fa).members() == expected;
}

std::vector<Subset> singletons(std::size_t n) {
  std::vector<Subset> out;
  for (Elt x = 0; x < n; ++x) out.push_back(Subset::single(x));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_order = 3;
  std::string cli_path;
  std::string data_dir = "data";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--max-order" && i + 1 < argc) max_order = std::stoul(argv[++i]);
    else if (arg == "--cli" && i + 1 < argc) cli_path = argv[++i];
    else if (arg == "--data" && i + 1 < argc) data_dir = argv[++i];
    else {
      std::cerr << "usage: acceptance [--max-order N] [--cli PATH] [--data DIR]\n";
      return 2;
    }
  }

  std::printf("exhaustive catalog bound: order <= %zu\n", max_order);
  const CertifiedCatalog cat = certify_catalog(max_order);
  std::printf("catalog entries: %zu\n", cat.entries.size());

  criterion(1, "cover complex equals construct on the full catalog", [&] {
    for (const auto& r : cat.reports)
      if (!r.cover_equals_construct || !r.guard_breach.empty() || !r.error.empty())
        return false;
    return true;
  });

  criterion(2, "points, direct, and injectivity ER tests agree", [&] {
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
      if (!cat.reports[i].points_agrees_direct) return false;
      const auto& s = cat.entries[i].semigroup;
      if (er_membership_via_points(s) != is_in_er(s)) return false;
      if (is_in_er(s) != is_in_er_via_injectivity(s)) return false;
    }
    return true;
  });

  criterion(3, "transition semigroup in ER, maps decreasing, flow axioms hold", [&] {
    for (const auto& r : cat.reports)
      if (!r.transition_in_er || !r.lambda_decreasing_ok || !r.flow_ok) return false;
    return true;
  });

  criterion(4, "witness fibers inside flow values and covering the construct", [&] {
    for (const auto& r : cat.reports)
      if (!r.fibers_ok) return false;
    return true;
  });

  criterion(5, "lemma suite on the catalog plus 100 random Rees quotients", [&] {
    for (const auto& r : cat.reports)
      if (!r.lemma_kernel_blocks || !r.lemma_activator_action || !r.lemma_blowup ||
          !r.lemma_idempotent_blowup || !r.lemma_stabilizer_facts || !r.lemma_stability)
        return false;
    // kernel computation commutes with Rees-quotient surjections
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& s = cat.entries[rng() % cat.entries.size()].semigroup;
      const auto ideal = oracles::ideal_generated(s, static_cast<Elt>(rng() % s.order()));
      const auto q = oracles::rees_quotient(s, ideal);
      std::set<Elt> mapped;
      for (Elt x : group_kernel(s)) mapped.insert(q.image_of[x]);
      if (std::vector<Elt>(mapped.begin(), mapped.end()) != group_kernel(q.semigroup))
        return false;
    }
    return true;
  });

  criterion(6, "named instances: b2, t2, and the small groups", [&] {
    const auto b2 = load(data_dir + "/b2.sgp");
    const auto t2 = load(data_dir + "/t2.sgp");
    const auto c2 = load(data_dir + "/c2.sgp");
    const auto c3 = load(data_dir + "/c3.sgp");
    const auto c2c2 = load(data_dir + "/c2c2.sgp");

    if (!construct_members_are(b2, singletons(5))) return false;
    std::vector<Subset> t2_expected = singletons(4);
    t2_expected.push_back(Subset::of({2, 3}));
    if (!construct_members_are(t2, t2_expected)) return false;
    const auto maximal = max_pointlikes(construct_er(t2));
    if (std::find(maximal.begin(), maximal.end(), Subset::of({2, 3})) == maximal.end())
      return false;
    for (const auto& g : {c2, c3, c2c2})
      if (!construct_members_are(g, singletons(g.order()))) return false;
    return true;
  });

  criterion(7, "verify emits byte-identical json across runs", [&] {
    if (cli_path.empty()) {
      std::fprintf(stderr, "  (no --cli given, comparing library output only)\n");
      const auto t2 = load(data_dir + "/t2.sgp");
      return report_to_json(certify(t2)) == report_to_json(certify(t2));
    }
    for (const char* name : {"t2", "b2", "c3", "n2"}) {
      const std::string cmd =
          cli_path + " verify " + data_dir + "/" + name + ".sgp --json";
      const std::string a = run_command(cmd);
      const std::string b = run_command(cmd);
      if (a.empty() || a != b) return false;
    }
    return true;
  });

  std::printf("%s (%d failing criteria)\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              failures);
  return failures == 0 ? 0 : 1;
}
