#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pointlike/catalog.hpp"
#include "pointlike/cayley.hpp"
#include "pointlike/construct.hpp"
#include "pointlike/verify.hpp"

namespace {

using namespace pointlike;
using Json = nlohmann::ordered_json;

// Exit-code contract: 0 all properties hold, 1 property violation,
// 2 guard breach, 3 input error.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kGuard = 2;
constexpr int kInput = 3;

Semigroup load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cayley(buf.str());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_classes(const char* name, const std::vector<std::vector<Elt>>& classes,
                   const Semigroup& s) {
  std::cout << "  " << name << "-classes (" << classes.size() << "):";
  for (const auto& cls : classes) {
    std::cout << " {";
    for (std::size_t i = 0; i < cls.size(); ++i)
      std::cout << (i ? " " : "") << s.label(cls[i]);
    std::cout << "}";
  }
  std::cout << "\n";
}

int cmd_info(const std::string& path) {
  const Semigroup s = load(path);
  std::cout << "order: " << s.order() << "\n";
  std::cout << "idempotents:";
  for (Elt e : idempotents(s)) std::cout << ' ' << s.label(e);
  std::cout << "\n";
  const GreenData g = green(s);
  print_classes("R", g.r_classes, s);
  print_classes("L", g.l_classes, s);
  print_classes("H", g.h_classes, s);
  print_classes("J", g.j_classes, s);
  const bool direct = is_in_er(s);
  const bool injective = is_in_er_via_injectivity(s);
  std::cout << "in ER (idempotent-generated part R-trivial): " << yes_no(direct) << "\n";
  std::cout << "in ER (R-classes carry injective actions):   " << yes_no(injective) << "\n";
  return direct == injective ? kOk : kViolation;
}

int cmd_kernel(const std::string& path) {
  const Semigroup s = load(path);
  const GreenData g = green(s);
  const TypeIIData t2 = type2_partition(s, g);
  std::cout << "group kernel:";
  for (Elt x : t2.kernel) std::cout << ' ' << s.label(x);
  std::cout << "\n";
  for (unsigned rc = 0; rc < g.r_classes.size(); ++rc) {
    std::cout << "R-class " << rc << ":";
    for (unsigned b : t2.blocks_of_r_class[rc]) {
      std::cout << " [";
      const auto& blk = t2.blocks[b];
      for (std::size_t i = 0; i < blk.size(); ++i)
        std::cout << (i ? " " : "") << s.label(blk[i]);
      std::cout << "]";
    }
    std::cout << "\n";
  }
  return kOk;
}

Json subsets_json(const std::vector<Subset>& sets) {
  Json arr = Json::array();
  for (Subset x : sets) arr.push_back(x.elements());
  return arr;
}

int cmd_pointlikes(const std::string& path, bool as_json, const Guards& guards) {
  const Semigroup s = load(path);
  const ConstructResult cr = construct_er(s, guards);
  const auto maximal = max_pointlikes(cr);
  if (as_json) {
    Json doc;
    doc["input"] = {{"order", s.order()}};
    doc["in_er"] = cr.complex.singletons_only();
    doc["complex_size"] = cr.complex.size();
    doc["rounds"] = cr.rounds;
    Json trace = Json::array();
    for (const auto& round : cr.added_per_round) trace.push_back(subsets_json(round));
    doc["trace"] = trace;
    doc["maximal_pointlikes"] = subsets_json(maximal);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "pointlike complex size: " << cr.complex.size() << " (rounds: " << cr.rounds
              << ")\n";
    for (std::size_t i = 0; i < cr.added_per_round.size(); ++i) {
      std::cout << "round " << (i + 1) << " added:";
      for (Subset x : cr.added_per_round[i]) std::cout << ' ' << render_subset(s, x);
      std::cout << "\n";
    }
    std::cout << "maximal pointlike sets:";
    for (Subset x : maximal) std::cout << ' ' << render_subset(s, x);
    std::cout << "\n";
    std::cout << "in ER: " << yes_no(cr.complex.singletons_only()) << "\n";
  }
  return kOk;
}

int cmd_automaton(const std::string& path, bool as_json, const Guards& guards) {
  const Semigroup s = load(path);
  const ConstructResult cr = construct_er(s, guards);
  const StableData sd = build_stable(s, cr, guards);
  const GlobalGroup gg = build_global_group(sd, build_local_groups(s, sd), guards);
  const FlowAutomaton fa = build_automaton(s, sd, gg, guards);
  const TransitionSemigroup ts = transition_semigroup(fa, guards);
  const WitnessMorphism wm = witness_relational_morphism(s, fa, ts);
  if (as_json) {
    std::cout << automaton_to_json(s, sd, gg, fa, ts, wm);
  } else {
    std::cout << "complex: " << cr.complex.size() << "  fixed points: " << sd.fixed.size()
              << "  group: " << gg.size() << "  states: " << fa.state_count()
              << "  transition semigroup: " << ts.semigroup.order()
              << "  morphism pairs: " << wm.pairs.size() << "\n";
    for (std::size_t q = 0; q < fa.noninit.size(); ++q)
      std::cout << "state " << (q + 1) << ": set=" << render_subset(s, fa.noninit[q].fixed_set)
                << " d=" << fa.noninit[q].d << " g=" << fa.noninit[q].g
                << " flow=" << render_subset(s, fa.flow[q]) << "\n";
  }
  return kOk;
}

int report_exit_code(const VerificationReport& r) {
  if (!r.guard_breach.empty()) return kGuard;
  return r.all_ok() ? kOk : kViolation;
}

void print_report_text(const VerificationReport& r, const Semigroup& s, bool timings) {
  auto flag = [](const char* name, bool v) {
    std::cout << "  " << (v ? "[ ok ] " : "[FAIL] ") << name << "\n";
  };
  std::cout << "order " << r.order << ", in ER: " << yes_no(r.in_er) << "\n";
  std::cout << "sizes: complex=" << r.complex_size << " fixed=" << r.fixed_point_count
            << " group=" << r.group_size << " states=" << r.state_count
            << " transition=" << r.transition_size << "\n";
  std::cout << "maximal pointlike sets:";
  for (Subset x : r.maximal_pointlikes) std::cout << ' ' << render_subset(s, x);
  std::cout << "\n";
  flag("flow axioms", r.flow_ok);
  flag("update maps decreasing", r.lambda_decreasing_ok);
  flag("transition semigroup in ER", r.transition_in_er);
  flag("cover complex equals construct", r.cover_equals_construct);
  flag("points/direct/injective agree", r.points_agrees_direct);
  flag("witness fibers sound and complete", r.fibers_ok);
  flag("kernel blocks lemma", r.lemma_kernel_blocks);
  flag("activator action lemma", r.lemma_activator_action);
  flag("blowup lemma", r.lemma_blowup);
  flag("idempotent blowup lemma", r.lemma_idempotent_blowup);
  flag("stabilizer facts", r.lemma_stabilizer_facts);
  flag("stability lemma", r.lemma_stability);
  if (!r.guard_breach.empty()) std::cout << "guard breach: " << r.guard_breach << "\n";
  if (!r.error.empty()) std::cout << "internal error: " << r.error << "\n";
  if (timings)
    std::cout << "timings (ms): construct=" << r.construct_ms << " stable=" << r.stable_ms
              << " automaton=" << r.automaton_ms << " checks=" << r.checks_ms << "\n";
  std::cout << (r.all_ok() ? "VERIFIED" : "FAILED") << "\n";
}

int cmd_verify(const std::string& path, bool as_json, bool timings, const Guards& guards) {
  const Semigroup s = load(path);
  const VerificationReport r = certify(s, guards);
  if (as_json)
    std::cout << report_to_json(r, timings);
  else
    print_report_text(r, s, timings);
  return report_exit_code(r);
}

int cmd_catalog(std::size_t max_order, unsigned jobs, const Guards& guards) {
  const auto entries = enumerate_catalog(max_order, guards);
  std::vector<VerificationReport> reports(entries.size());

  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      reports[i] = certify(entries[i].semigroup, guards);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++)
          reports[i] = certify(entries[i].semigroup, guards);
      });
    for (auto& th : pool) th.join();
  }

  std::size_t failures = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const auto& r = reports[i];
    if (!r.all_ok()) ++failures;
    std::cout << "order " << e.semigroup.order() << " entry " << e.id << ": "
              << (r.all_ok() ? "ok" : "FAIL") << "  in_er=" << yes_no(r.in_er)
              << " complex=" << r.complex_size << " fixed=" << r.fixed_point_count
              << " group=" << r.group_size << " states=" << r.state_count
              << " transition=" << r.transition_size;
    if (!r.guard_breach.empty()) std::cout << "  guard: " << r.guard_breach;
    if (!r.error.empty()) std::cout << "  error: " << r.error;
    std::cout << "\n";
  }
  std::cout << entries.size() << " entries, " << failures << " failures\n";
  return failures == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ER-pointlike subsets of finite semigroups: construct, certify, explain"};
  app.require_subcommand(1);
  Guards guards;

  std::string file;
  bool as_json = false, timings = false;
  std::size_t max_order = 3;
  unsigned jobs = 1;

  auto* info = app.add_subcommand("info", "order, idempotents, Green's classes, ER membership");
  info->add_option("file", file, "Cayley table file")->required();

  auto* kernel = app.add_subcommand("kernel", "group kernel and type-II blocks");
  kernel->add_option("file", file, "Cayley table file")->required();

  auto* pl = app.add_subcommand("pointlikes", "maximal ER-pointlike sets with the fixpoint trace");
  pl->add_option("file", file, "Cayley table file")->required();
  pl->add_flag("--json", as_json, "emit JSON");

  auto* aut = app.add_subcommand("automaton", "flow automaton and witness relational morphism");
  aut->add_option("file", file, "Cayley table file")->required();
  aut->add_flag("--json", as_json, "emit the full JSON document");

  auto* ver = app.add_subcommand("verify", "full certification report");
  ver->add_option("file", file, "Cayley table file")->required();
  ver->add_flag("--json", as_json, "emit JSON");
  ver->add_flag("--timings", timings, "include timings (JSON stops being byte-stable)");

  auto* cat = app.add_subcommand("catalog", "certify every semigroup up to isomorphism");
  cat->add_option("--max-order", max_order, "largest order to enumerate")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4}));
  cat->add_option("--jobs", jobs, "worker threads across entries")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*info) return cmd_info(file);
    if (*kernel) return cmd_kernel(file);
    if (*pl) return cmd_pointlikes(file, as_json, guards);
    if (*aut) return cmd_automaton(file, as_json, guards);
    if (*ver) return cmd_verify(file, as_json, timings, guards);
    if (*cat) return cmd_catalog(max_order, jobs, guards);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard breach: " << e.what() << "\n";
    return kGuard;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant failed: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
