#include "pointlike/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "pointlike/construct.hpp"

namespace pointlike {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

unsigned PointerPreorder::index_of(Elt x, unsigned d) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), std::make_pair(x, d));
  if (it == carrier.end() || *it != std::make_pair(x, d))
    throw std::out_of_range("pair is not in the preorder carrier");
  return static_cast<unsigned>(it - carrier.begin());
}

PointerPreorder build_pointer_preorder(const StableData& sd, const GlobalGroup& gg,
                                       bool literal_second_component) {
  PointerPreorder p;
  for (Elt x : sd.fixed)
    for (unsigned d = 0; d < gg.size(); ++d) p.carrier.emplace_back(x, d);
  p.top = static_cast<unsigned>(p.carrier.size());

  const auto k = p.carrier.size() + 1;
  p.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < p.carrier.size(); ++i) {
    p.leq[i][p.top] = true;  // the added point is a maximum
    for (std::size_t j = 0; j < p.carrier.size(); ++j) {
      if (literal_second_component && p.carrier[i].second != p.carrier[j].second)
        continue;
      p.leq[i][j] = sd.green.r_below_eq(p.carrier[i].first, p.carrier[j].first);
    }
  }
  p.leq[p.top][p.top] = true;
  return p;
}

std::vector<unsigned> update_map(const Semigroup& s, const StableData& sd,
                                 const GlobalGroup& gg, const FlowAutomaton& fa,
                                 const PointerPreorder& p, Elt letter, unsigned g) {
  if (letter >= s.order()) throw std::out_of_range("letter out of range");
  const Semigroup& c = sd.complex.semigroup;
  const Elt sing = sd.complex.index_of(Subset::single(letter));
  std::vector<unsigned> f(p.size());

  f[p.top] = p.index_of(sd.closure[sing], gg.letter[letter]);

  for (std::size_t i = 0; i < p.carrier.size(); ++i) {
    const auto [x, d] = p.carrier[i];
    const unsigned q = fa.find_state(sd.complex.subsets[x], d, g);
    if (q == 0) {  // (x, d, g) is not a state: the extension fixes the pair
      f[i] = static_cast<unsigned>(i);
      continue;
    }
    const Elt v = sd.complex.index_of(fa.flow[q - 1]);
    const Elt vs = c.mul(v, sing);
    const unsigned ggs = gg.compose(g, gg.letter[letter]);
    if (sd.green.r_equiv(vs, v) &&
        fa.find_state(sd.complex.subsets[x], d, ggs) != 0) {
      f[i] = static_cast<unsigned>(i);
    } else {
      f[i] = p.index_of(sd.closure[vs], ggs);
    }
  }
  return f;
}

bool check_lambda_decreasing(const Semigroup& s, const StableData& sd,
                             const GlobalGroup& gg, const FlowAutomaton& fa,
                             const PointerPreorder& p, UpdateViolation* violation) {
  for (Elt letter = 0; letter < s.order(); ++letter)
    for (unsigned g = 0; g < gg.size(); ++g) {
      const auto f = update_map(s, sd, gg, fa, p, letter, g);
      for (unsigned i = 0; i < p.size(); ++i)
        if (f[i] != i && !p.strictly_below(f[i], i)) {
          if (violation) *violation = UpdateViolation{letter, g, i};
          return false;
        }
    }
  return true;
}

bool check_decreasing_maps_r_trivial(const PointerPreorder& p,
                                     const std::vector<std::vector<unsigned>>& maps,
                                     const Guards& guards) {
  for (const auto& f : maps) {
    if (f.size() != p.size())
      throw std::invalid_argument("map size does not match the carrier");
    for (unsigned i = 0; i < f.size(); ++i)
      if (f[i] != i && !p.strictly_below(f[i], i))
        throw std::invalid_argument("a sampled map is not decreasing");
  }
  if (maps.empty()) return true;

  std::map<std::vector<unsigned>, Elt> index;
  std::vector<std::vector<unsigned>> elements;
  auto intern = [&](const std::vector<unsigned>& f) {
    auto [it, fresh] = index.emplace(f, static_cast<Elt>(elements.size()));
    if (fresh) {
      elements.push_back(f);
      if (elements.size() > guards.max_semigroup_size)
        throw GuardExceeded("decreasing-map closure exceeds max_semigroup_size");
    }
    return it->second;
  };
  for (const auto& f : maps) intern(f);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& gen : maps) {
      std::vector<unsigned> h(p.size());
      for (unsigned q = 0; q < p.size(); ++q) h[q] = gen[elements[i][q]];
      intern(h);
    }
  const auto m = elements.size();
  std::vector<Elt> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<unsigned> h(p.size());
      for (unsigned q = 0; q < p.size(); ++q) h[q] = elements[j][elements[i][q]];
      table[i * m + j] = index.at(h);
    }
  return is_r_trivial(Semigroup::from_table_unchecked(std::move(table), m));
}

bool check_transition_in_er(const Semigroup& transition) { return is_in_er(transition); }

bool VerificationReport::all_ok() const {
  return guard_breach.empty() && error.empty() && flow_ok && lambda_decreasing_ok &&
         transition_in_er && cover_equals_construct && points_agrees_direct &&
         fibers_ok && lemma_kernel_blocks && lemma_activator_action && lemma_blowup &&
         lemma_idempotent_blowup && lemma_stabilizer_facts && lemma_stability;
}

VerificationReport certify(const Semigroup& s, const Guards& guards) {
  VerificationReport r;
  r.order = s.order();
  try {
    auto t0 = Clock::now();
    const ConstructResult cr = construct_er(s, guards);
    r.construct_ms = ms_since(t0);
    r.complex_size = cr.complex.size();
    r.maximal_pointlikes = max_pointlikes(cr);
    for (Subset x : r.maximal_pointlikes)
      r.maximal_rendered.push_back(render_subset(s, x));

    const bool direct = is_in_er(s);
    const bool injective = is_in_er_via_injectivity(s);
    const bool points = cr.complex.singletons_only();
    r.in_er = direct;
    r.points_agrees_direct = (direct == injective) && (injective == points);

    {
      const GreenData g = green(s);
      const TypeIIData t2 = type2_partition(s, g);
      const ActivatorData act = activators(s, g);
      r.lemma_kernel_blocks = check_kernel_partial_identity(s, g, t2);
      r.lemma_activator_action = check_activator_block_action(s, g, t2, act);
    }

    t0 = Clock::now();
    const StableData sd = build_stable(s, cr, guards);
    r.stable_ms = ms_since(t0);
    r.fixed_point_count = sd.fixed.size();
    r.lemma_blowup = check_blowup(sd);
    r.lemma_idempotent_blowup = check_idempotent_blowup(sd);
    r.lemma_stabilizer_facts = check_stabilizer_facts(sd);
    r.lemma_stability = check_stability(sd);

    t0 = Clock::now();
    const GlobalGroup gg = build_global_group(sd, build_local_groups(s, sd), guards);
    const FlowAutomaton fa = build_automaton(s, sd, gg, guards);
    const TransitionSemigroup ts = transition_semigroup(fa, guards);
    const WitnessMorphism wm = witness_relational_morphism(s, fa, ts);
    r.automaton_ms = ms_since(t0);
    r.group_size = gg.size();
    r.state_count = fa.state_count();
    r.transition_size = ts.semigroup.order();

    t0 = Clock::now();
    r.flow_ok = check_flow(s, fa);
    r.cover_equals_construct = cover_complex(s, fa, guards) == cr.complex;
    const PointerPreorder p = build_pointer_preorder(sd, gg);
    r.lambda_decreasing_ok = check_lambda_decreasing(s, sd, gg, fa, p);
    r.transition_in_er = check_transition_in_er(ts.semigroup);
    r.fibers_ok = check_witness_fibers(fa, ts, wm) &&
                  check_construct_covered_by_fibers(cr, wm);
    r.checks_ms = ms_since(t0);
  } catch (const GuardExceeded& e) {
    r.guard_breach = e.what();
  } catch (const InternalError& e) {
    r.error = e.what();
  }
  return r;
}

std::string report_to_json(const VerificationReport& r, bool include_timings) {
  nlohmann::ordered_json doc;
  doc["input"] = {{"order", r.order}};
  doc["in_er"] = r.in_er;
  doc["flags"] = {
      {"flow_ok", r.flow_ok},
      {"lambda_decreasing_ok", r.lambda_decreasing_ok},
      {"transition_in_er", r.transition_in_er},
      {"cover_equals_construct", r.cover_equals_construct},
      {"points_agrees_direct", r.points_agrees_direct},
      {"fibers_ok", r.fibers_ok},
      {"lemma_kernel_blocks", r.lemma_kernel_blocks},
      {"lemma_activator_action", r.lemma_activator_action},
      {"lemma_blowup", r.lemma_blowup},
      {"lemma_idempotent_blowup", r.lemma_idempotent_blowup},
      {"lemma_stabilizer_facts", r.lemma_stabilizer_facts},
      {"lemma_stability", r.lemma_stability},
  };
  doc["sizes"] = {
      {"complex", r.complex_size},
      {"fixed_points", r.fixed_point_count},
      {"group", r.group_size},
      {"states", r.state_count},
      {"transition", r.transition_size},
  };
  nlohmann::ordered_json maximal = nlohmann::ordered_json::array();
  for (Subset x : r.maximal_pointlikes) maximal.push_back(x.elements());
  doc["maximal_pointlikes"] = maximal;
  if (!r.guard_breach.empty()) doc["guard_breach"] = r.guard_breach;
  if (!r.error.empty()) doc["error"] = r.error;
  doc["ok"] = r.all_ok();
  if (include_timings)
    doc["timings_ms"] = {
        {"construct", r.construct_ms},
        {"stable", r.stable_ms},
        {"automaton", r.automaton_ms},
        {"checks", r.checks_ms},
    };
  return doc.dump(2) + "\n";
}

}  // namespace pointlike
