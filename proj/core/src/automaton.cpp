#include "pointlike/automaton.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace pointlike {

namespace {

using Json = nlohmann::ordered_json;

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
  return out;
}

Permutation inverse_of(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<unsigned>(i);
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

}  // namespace

unsigned LocalGroup::index_of(const Permutation& p) const {
  auto it = std::find(elements.begin(), elements.end(), p);
  if (it == elements.end())
    throw InternalError("permutation missing from a generated local group");
  return static_cast<unsigned>(it - elements.begin());
}

std::vector<LocalGroup> build_local_groups(const Semigroup& s, const StableData& sd) {
  const Semigroup& c = sd.complex.semigroup;
  std::vector<LocalGroup> out;

  for (unsigned rc : sd.stable_r_classes) {
    LocalGroup lg;
    lg.r_class = rc;
    const QuotientPts q = quotient_pts(c, rc, sd.green, sd.type2);
    lg.states = q.states;
    const auto m = lg.states.size();

    for (Elt letter = 0; letter < s.order(); ++letter) {
      const Elt sing = sd.complex.index_of(Subset::single(letter));
      // Partial injection of the quotient action, completed to a
      // permutation: unmapped positions and unhit positions are paired off
      // in canonical block order.
      Permutation perm(m, QuotientPts::kUndefined);
      std::vector<bool> hit(m, false);
      for (std::size_t pos = 0; pos < m; ++pos) {
        const unsigned img = q.action[pos][sing];
        if (img == QuotientPts::kUndefined) continue;
        perm[pos] = img;
        hit[img] = true;
      }
      std::vector<unsigned> unhit;
      for (unsigned pos = 0; pos < m; ++pos)
        if (!hit[pos]) unhit.push_back(pos);
      std::size_t next = 0;
      for (std::size_t pos = 0; pos < m; ++pos)
        if (perm[pos] == QuotientPts::kUndefined) perm[pos] = unhit[next++];
      lg.letter_perm.push_back(std::move(perm));
    }

    // Close under composition (a finite set of permutations generates a
    // group); BFS order keeps everything deterministic.
    for (const auto& p : lg.letter_perm)
      if (std::find(lg.elements.begin(), lg.elements.end(), p) == lg.elements.end())
        lg.elements.push_back(p);
    for (std::size_t i = 0; i < lg.elements.size(); ++i)
      for (const auto& gen : lg.letter_perm) {
        Permutation p = compose(lg.elements[i], gen);
        if (std::find(lg.elements.begin(), lg.elements.end(), p) == lg.elements.end())
          lg.elements.push_back(p);
      }

    const auto k = lg.elements.size();
    lg.mult.assign(k, std::vector<unsigned>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        lg.mult[i][j] = lg.index_of(compose(lg.elements[i], lg.elements[j]));
    lg.inverse.resize(k);
    bool has_identity = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (is_identity(lg.elements[i])) {
        lg.identity = static_cast<unsigned>(i);
        has_identity = true;
      }
      lg.inverse[i] = lg.index_of(inverse_of(lg.elements[i]));
    }
    if (!has_identity) throw InternalError("local group lacks an identity");
    out.push_back(std::move(lg));
  }
  return out;
}

unsigned GlobalGroup::compose(unsigned a, unsigned b) const {
  std::vector<unsigned> tuple(locals.size());
  for (std::size_t r = 0; r < locals.size(); ++r)
    tuple[r] = locals[r].mult[elements[a][r]][elements[b][r]];
  auto it = index_.find(tuple);
  if (it == index_.end())
    throw InternalError("global group is not closed under composition");
  return it->second;
}

unsigned GlobalGroup::act_block(unsigned block, unsigned g) const {
  const unsigned slot = local_of_block_[block];
  if (slot == QuotientPts::kUndefined)
    throw std::out_of_range("block does not lie in a stable R-class");
  const LocalGroup& lg = locals[slot];
  return lg.states[lg.elements[elements[g][slot]][pos_of_block_[block]]];
}

GlobalGroup build_global_group(const StableData& sd, std::vector<LocalGroup> locals,
                               const Guards& guards) {
  GlobalGroup gg;
  gg.locals = std::move(locals);
  const auto slots = gg.locals.size();

  gg.local_of_block_.assign(sd.type2.blocks.size(), QuotientPts::kUndefined);
  gg.pos_of_block_.assign(sd.type2.blocks.size(), 0);
  for (std::size_t r = 0; r < slots; ++r)
    for (std::size_t pos = 0; pos < gg.locals[r].states.size(); ++pos) {
      gg.local_of_block_[gg.locals[r].states[pos]] = static_cast<unsigned>(r);
      gg.pos_of_block_[gg.locals[r].states[pos]] = static_cast<unsigned>(pos);
    }

  auto intern = [&](const std::vector<unsigned>& tuple) {
    auto [it, fresh] = gg.index_.emplace(tuple, static_cast<unsigned>(gg.elements.size()));
    if (fresh) {
      gg.elements.push_back(tuple);
      if (gg.elements.size() > guards.max_group_size)
        throw GuardExceeded("global group exceeds max_group_size");
    }
    return it->second;
  };

  // Closures of singletons are always fixed points, so at least one R-class
  // is stable.
  if (gg.locals.empty()) throw InternalError("no stable R-classes");

  const auto n_letters = gg.locals[0].letter_perm.size();
  std::vector<std::vector<unsigned>> letter_tuples;
  for (std::size_t letter = 0; letter < n_letters; ++letter) {
    std::vector<unsigned> tuple(slots);
    for (std::size_t r = 0; r < slots; ++r)
      tuple[r] = gg.locals[r].index_of(gg.locals[r].letter_perm[letter]);
    gg.letter.push_back(intern(tuple));
    letter_tuples.push_back(std::move(tuple));
  }

  for (std::size_t i = 0; i < gg.elements.size(); ++i)
    for (const auto& gen : letter_tuples) {
      std::vector<unsigned> tuple(slots);
      for (std::size_t r = 0; r < slots; ++r)
        tuple[r] = gg.locals[r].mult[gg.elements[i][r]][gen[r]];
      intern(tuple);
    }

  // A subsemigroup of a finite direct product of groups is a group; certify
  // rather than assume.
  std::vector<unsigned> identity_tuple(slots);
  for (std::size_t r = 0; r < slots; ++r) identity_tuple[r] = gg.locals[r].identity;
  auto id_it = gg.index_.find(identity_tuple);
  if (id_it == gg.index_.end())
    throw InternalError("global group lacks an identity");
  gg.identity = id_it->second;
  gg.inverse.resize(gg.elements.size());
  for (std::size_t i = 0; i < gg.elements.size(); ++i) {
    std::vector<unsigned> tuple(slots);
    for (std::size_t r = 0; r < slots; ++r)
      tuple[r] = gg.locals[r].inverse[gg.elements[i][r]];
    auto it = gg.index_.find(tuple);
    if (it == gg.index_.end())
      throw InternalError("global group element has no inverse");
    gg.inverse[i] = it->second;
    if (gg.compose(i, it->second) != gg.identity)
      throw InternalError("global group inverse does not compose to identity");
  }
  return gg;
}

unsigned FlowAutomaton::find_state(Subset x, unsigned d, unsigned g) const {
  auto it = index.find({x.bits, d, g});
  return it == index.end() ? 0 : it->second;
}

namespace {

// Restrict to the states reachable from init; delta is invariant on them.
FlowAutomaton prune_to_reachable(const FlowAutomaton& fa) {
  const std::size_t n_letters = fa.delta.empty() ? 0 : fa.delta[0].size();
  std::vector<unsigned> keep{0};
  std::vector<unsigned> new_id(fa.state_count(), 0);
  std::vector<bool> seen(fa.state_count(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t letter = 0; letter < n_letters; ++letter) {
      const unsigned t = fa.delta[keep[i]][letter];
      if (!seen[t]) {
        seen[t] = true;
        new_id[t] = static_cast<unsigned>(keep.size());
        keep.push_back(t);
      }
    }

  FlowAutomaton out;
  out.delta.assign(keep.size(), std::vector<unsigned>(n_letters, 0));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t letter = 0; letter < n_letters; ++letter)
      out.delta[i][letter] = new_id[fa.delta[keep[i]][letter]];
    if (i == 0) continue;
    const auto& st = fa.noninit[keep[i] - 1];
    out.noninit.push_back(st);
    out.flow.push_back(fa.flow[keep[i] - 1]);
    out.index.emplace(std::make_tuple(st.fixed_set.bits, st.d, st.g),
                      static_cast<unsigned>(i));
  }
  return out;
}

}  // namespace

FlowAutomaton build_automaton(const Semigroup& s, const StableData& sd,
                              const GlobalGroup& gg, const Guards& guards,
                              StatePolicy policy) {
  const Semigroup& c = sd.complex.semigroup;
  FlowAutomaton fa;

  // States are materialized eagerly from the full triple product filtered by
  // the stable-block predicate; reachability pruning would change the
  // transition semigroup.
  std::vector<std::tuple<Elt, unsigned, unsigned>> raw;  // (complex elt, d, g)
  for (Elt x : sd.fixed)
    for (unsigned d = 0; d < gg.size(); ++d)
      for (unsigned g = 0; g < gg.size(); ++g) {
        const unsigned moved =
            gg.act_block(sd.type2.block_of[x], gg.compose(gg.inverse[d], g));
        if (!sd.block_is_stable[moved]) continue;
        raw.emplace_back(x, d, g);
        if (raw.size() + 1 > guards.max_states)
          throw GuardExceeded("automaton exceeds max_states");
      }

  for (const auto& [x, d, g] : raw) {
    const Subset xs = sd.complex.subsets[x];
    fa.noninit.push_back(AutomatonState{xs, d, g});
    fa.index.emplace(std::make_tuple(xs.bits, d, g),
                     static_cast<unsigned>(fa.noninit.size()));
  }

  // Flow values: union of the moved block; lands back in the fixed points.
  fa.flow.reserve(fa.noninit.size());
  for (const auto& [x, d, g] : raw) {
    const unsigned moved =
        gg.act_block(sd.type2.block_of[x], gg.compose(gg.inverse[d], g));
    Subset v;
    for (Elt member : sd.type2.blocks[moved]) v = v | sd.complex.subsets[member];
    const Elt vi = sd.complex.index_of(v);
    if (!sd.is_fixed[vi]) throw InternalError("flow value is not a fixed point");
    fa.flow.push_back(v);
  }

  fa.delta.assign(fa.state_count(), std::vector<unsigned>(s.order(), 0));
  for (Elt letter = 0; letter < s.order(); ++letter) {
    const Elt sing = sd.complex.index_of(Subset::single(letter));
    const unsigned gs = gg.letter[letter];
    // init falls onto the closure of the singleton.
    const Elt closed = sd.closure[sing];
    const unsigned init_target = fa.find_state(sd.complex.subsets[closed], gs, gs);
    if (init_target == 0) throw InternalError("initial transition left the state set");
    fa.delta[0][letter] = init_target;

    for (std::size_t q = 0; q < fa.noninit.size(); ++q) {
      const auto& [x, d, g] = raw[q];
      const Elt v = sd.complex.index_of(fa.flow[q]);
      const Elt vs = c.mul(v, sing);
      const unsigned ggs = gg.compose(g, gg.letter[letter]);
      unsigned target = 0;
      if (sd.green.r_equiv(vs, v))
        target = fa.find_state(sd.complex.subsets[x], d, ggs);
      if (target == 0) {
        // Fall: restart at the stabilized product with matched components.
        const Elt landed = sd.closure[vs];
        target = fa.find_state(sd.complex.subsets[landed], ggs, ggs);
      }
      if (target == 0) throw InternalError("transition left the state set");
      fa.delta[q + 1][letter] = target;
    }
  }
  return policy == StatePolicy::kReachableOnly ? prune_to_reachable(fa) : fa;
}

bool check_flow(const Semigroup& s, const FlowAutomaton& fa) {
  for (Elt letter = 0; letter < s.order(); ++letter) {
    const unsigned q = fa.delta[0][letter];
    if (q == 0) return false;
    if (!fa.flow[q - 1].contains(letter)) return false;
  }
  for (std::size_t q = 1; q < fa.state_count(); ++q)
    for (Elt letter = 0; letter < s.order(); ++letter) {
      const unsigned target = fa.delta[q][letter];
      if (target == 0) return false;
      const Subset pushed = setwise_product(s, fa.flow[q - 1], Subset::single(letter));
      if (!pushed.subset_of(fa.flow[target - 1])) return false;
    }
  return true;
}

Complex cover_complex(const Semigroup& s, const FlowAutomaton& fa, const Guards& guards) {
  std::set<Subset> members;
  for (Subset v : fa.flow) {
    members.insert(v);
    for (std::uint64_t sub = (v.bits - 1) & v.bits; sub != 0; sub = (sub - 1) & v.bits)
      members.insert(Subset{sub});
  }
  if (members.size() > guards.max_complex_size)
    throw GuardExceeded("cover complex exceeds max_complex_size");
  // Everything under a flow value; the complex laws are certified, since
  // nothing in the construction forces them here.
  return Complex::from_members_certified(
      s, std::vector<Subset>(members.begin(), members.end()));
}

TransitionSemigroup transition_semigroup(const FlowAutomaton& fa, const Guards& guards) {
  const std::size_t nq = fa.state_count();
  const std::size_t n_letters = fa.delta.empty() ? 0 : fa.delta[0].size();

  TransitionSemigroup ts;
  std::map<std::vector<unsigned>, Elt> index;
  auto intern = [&](const std::vector<unsigned>& f) {
    auto [it, fresh] = index.emplace(f, static_cast<Elt>(ts.transformation.size()));
    if (fresh) {
      ts.transformation.push_back(f);
      if (ts.transformation.size() > guards.max_semigroup_size)
        throw GuardExceeded("transition semigroup exceeds max_semigroup_size");
    }
    return it->second;
  };

  std::vector<std::vector<unsigned>> gens;
  for (std::size_t letter = 0; letter < n_letters; ++letter) {
    std::vector<unsigned> f(nq);
    for (std::size_t q = 0; q < nq; ++q) f[q] = fa.delta[q][letter];
    ts.letter.push_back(intern(f));
    gens.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < ts.transformation.size(); ++i)
    for (const auto& gen : gens) {
      std::vector<unsigned> f(nq);
      for (std::size_t q = 0; q < nq; ++q) f[q] = gen[ts.transformation[i][q]];
      intern(f);
    }

  const auto m = ts.transformation.size();
  std::vector<Elt> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<unsigned> f(nq);
      for (std::size_t q = 0; q < nq; ++q) f[q] = ts.transformation[j][ts.transformation[i][q]];
      auto it = index.find(f);
      if (it == index.end())
        throw InternalError("transition semigroup is not closed");
      table[i * m + j] = it->second;
    }
  ts.semigroup = Semigroup::from_table_unchecked(std::move(table), m);
  return ts;
}

WitnessMorphism witness_relational_morphism(const Semigroup& s, const FlowAutomaton& fa,
                                            const TransitionSemigroup& ts) {
  std::set<std::pair<Elt, Elt>> graph;
  std::vector<std::pair<Elt, Elt>> work;
  auto add = [&](std::pair<Elt, Elt> p) {
    if (graph.insert(p).second) work.push_back(p);
  };
  for (Elt letter = 0; letter < s.order(); ++letter)
    add({letter, ts.letter[letter]});
  for (std::size_t i = 0; i < work.size(); ++i) {
    const auto snapshot_size = work.size();
    for (std::size_t j = 0; j < snapshot_size; ++j) {
      add({s.mul(work[i].first, work[j].first),
           ts.semigroup.mul(work[i].second, work[j].second)});
      add({s.mul(work[j].first, work[i].first),
           ts.semigroup.mul(work[j].second, work[i].second)});
    }
  }

  WitnessMorphism wm;
  wm.pairs.assign(graph.begin(), graph.end());

  // Fibers sit inside the flow of init moved by their element; anything else
  // contradicts the flow axioms.
  if (!check_witness_fibers(fa, ts, wm))
    throw InternalError("witness fiber escaped its flow value");
  return wm;
}

std::vector<Elt> WitnessMorphism::fiber(Elt t) const {
  std::vector<Elt> out;
  for (const auto& [a, b] : pairs)
    if (b == t) out.push_back(a);
  return out;
}

std::vector<Elt> WitnessMorphism::image() const {
  std::set<Elt> img;
  for (const auto& [a, b] : pairs) img.insert(b);
  return {img.begin(), img.end()};
}

bool check_witness_fibers(const FlowAutomaton& fa, const TransitionSemigroup& ts,
                          const WitnessMorphism& wm) {
  for (Elt t : wm.image()) {
    const unsigned q = ts.transformation[t][0];  // init moved by t
    if (q == 0) return false;
    const Subset value = fa.flow[q - 1];
    for (Elt s : wm.fiber(t))
      if (!value.contains(s)) return false;
  }
  return true;
}

bool check_construct_covered_by_fibers(const ConstructResult& cr,
                                       const WitnessMorphism& wm) {
  std::vector<Subset> fibers;
  for (Elt t : wm.image()) fibers.push_back(Subset::of(wm.fiber(t)));
  for (Subset x : cr.complex.members()) {
    bool covered = false;
    for (Subset f : fibers)
      if (x.subset_of(f)) {
        covered = true;
        break;
      }
    if (covered) continue;
    return false;
  }
  return true;
}

std::string automaton_to_json(const Semigroup& s, const StableData& sd,
                              const GlobalGroup& gg, const FlowAutomaton& fa,
                              const TransitionSemigroup& ts, const WitnessMorphism& wm) {
  Json doc;
  doc["semigroup"] = {{"order", s.order()}};

  Json complex = Json::array();
  for (Subset x : sd.complex.subsets) complex.push_back(x.elements());
  Json fixed = Json::array();
  for (Elt x : sd.fixed) fixed.push_back(sd.complex.subsets[x].elements());
  doc["construct"] = {{"members", complex}, {"stable", fixed}};

  Json group;
  group["order"] = gg.size();
  group["identity"] = gg.identity;
  Json classes = Json::array();
  for (const auto& lg : gg.locals) {
    Json cls;
    cls["r_class"] = lg.r_class;
    cls["blocks"] = lg.states;
    classes.push_back(cls);
  }
  group["stable_r_classes"] = classes;
  Json gels = Json::array();
  for (unsigned i = 0; i < gg.size(); ++i) {
    Json tuple = Json::array();
    for (std::size_t r = 0; r < gg.locals.size(); ++r)
      tuple.push_back(gg.locals[r].elements[gg.elements[i][r]]);
    gels.push_back(tuple);
  }
  group["elements"] = gels;
  Json letters = Json::array();
  for (unsigned g : gg.letter) letters.push_back(g);
  group["letter"] = letters;
  doc["group"] = group;

  Json states = Json::array();
  {
    Json init;
    init["id"] = 0;
    init["init"] = true;
    states.push_back(init);
  }
  for (std::size_t q = 0; q < fa.noninit.size(); ++q) {
    Json st;
    st["id"] = q + 1;
    st["set"] = fa.noninit[q].fixed_set.elements();
    st["d"] = fa.noninit[q].d;
    st["g"] = fa.noninit[q].g;
    st["flow"] = fa.flow[q].elements();
    states.push_back(st);
  }
  doc["states"] = states;
  doc["transitions"] = fa.delta;

  Json morphism = Json::array();
  for (const auto& [a, b] : wm.pairs) morphism.push_back(Json::array({a, b}));
  doc["morphism"] = {{"transition_order", ts.semigroup.order()},
                     {"letter", ts.letter},
                     {"pairs", morphism}};
  return doc.dump(2) + "\n";
}

}  // namespace pointlike
