#include "pointlike/stable.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pointlike {

namespace {

// Union, as a subset of S, of the type-II block of X; must be a member.
Elt block_union(const AbstractComplex& c, const TypeIIData& t2, Elt x) {
  Subset u;
  for (Elt member : t2.blocks[t2.block_of[x]]) u = u | c.subsets[member];
  try {
    return c.index_of(u);
  } catch (const std::out_of_range&) {
    throw InternalError("construct is not closed under block unions");
  }
}

}  // namespace

StableData build_stable(const Semigroup& s, const ConstructResult& cr,
                        const Guards& guards, IdempotentChoice choice) {
  if (!cr.complex.ambient().same_table(s))
    throw std::invalid_argument("construct was computed over a different semigroup");
  StableData sd;
  sd.complex = as_abstract_semigroup(cr.complex, guards);
  const Semigroup& c = sd.complex.semigroup;
  const auto m = c.order();
  sd.green = green(c);
  sd.type2 = type2_partition(c, sd.green);
  sd.act = activators(c, sd.green);
  const Elt identity = sd.act.identity();

  // E_X: an idempotent activator witness, with E_X = X whenever X itself is
  // idempotent.  The canonical subset order makes the pick deterministic;
  // the witness set is either {I} or lies inside C, never mixed.
  sd.chosen_idempotent.resize(m);
  for (Elt x = 0; x < m; ++x) {
    if (c.mul(x, x) == x) {
      sd.chosen_idempotent[x] = x;
      continue;
    }
    std::vector<Elt> candidates;
    for (Elt t : sd.act.witnesses[x])
      if (sd.act.lifted.mul(t, t) == t) candidates.push_back(t);
    if (candidates.empty())
      throw InternalError("no idempotent activator witness available");
    if (choice == IdempotentChoice::kCanonicalMin)
      sd.chosen_idempotent[x] = *std::min_element(
          candidates.begin(), candidates.end(), [&](Elt a, Elt b) {
            if (a == identity || b == identity) return b == identity && a != identity;
            return sd.complex.subsets[a] < sd.complex.subsets[b];
          });
    else
      sd.chosen_idempotent[x] = *std::max_element(
          candidates.begin(), candidates.end(), [&](Elt a, Elt b) {
            if (a == identity || b == identity) return a == identity && b != identity;
            return sd.complex.subsets[a] < sd.complex.subsets[b];
          });
  }

  sd.blowup.resize(m);
  for (Elt x = 0; x < m; ++x) sd.blowup[x] = block_union(sd.complex, sd.type2, x);

  sd.stab.resize(m);
  for (Elt x = 0; x < m; ++x) {
    const Elt e = sd.chosen_idempotent[x];
    sd.stab[x] = e == identity ? x : c.mul(x, omega_power(c, sd.blowup[e]));
  }

  // The closure is the idempotent power of stab as a single global map.
  sd.closure = sd.stab;
  for (std::size_t round = 0; round <= m; ++round) {
    std::vector<Elt> next(m);
    for (Elt x = 0; x < m; ++x) next[x] = sd.stab[sd.closure[x]];
    if (next == sd.closure) break;
    sd.closure = std::move(next);
    if (round == m) throw InternalError("stabilization map failed to converge");
  }

  sd.is_fixed.assign(m, false);
  for (Elt x = 0; x < m; ++x)
    if (sd.stab[x] == x) {
      sd.is_fixed[x] = true;
      sd.fixed.push_back(x);
    }

  // Stable blocks by the displayed definition: the union of the block is one
  // of its own members.
  sd.block_is_stable.assign(sd.type2.blocks.size(), false);
  for (unsigned b = 0; b < sd.type2.blocks.size(); ++b) {
    const Elt u = block_union(sd.complex, sd.type2, sd.type2.blocks[b][0]);
    if (sd.type2.block_of[u] == b &&
        std::binary_search(sd.type2.blocks[b].begin(), sd.type2.blocks[b].end(), u)) {
      sd.block_is_stable[b] = true;
      sd.stable_blocks.push_back(b);
    }
  }

  std::vector<bool> r_has_fixed(sd.green.r_classes.size(), false);
  for (Elt x : sd.fixed) r_has_fixed[sd.green.r_class_of[x]] = true;
  for (unsigned rc = 0; rc < r_has_fixed.size(); ++rc)
    if (r_has_fixed[rc]) sd.stable_r_classes.push_back(rc);

  return sd;
}

bool check_blowup(const StableData& sd) {
  const Semigroup& c = sd.complex.semigroup;
  for (Elt x = 0; x < c.order(); ++x) {
    if (!sd.complex.subsets[x].subset_of(sd.complex.subsets[sd.blowup[x]])) return false;
    if (!sd.green.r_below_eq(sd.blowup[x], x)) return false;
    for (Elt a : sd.act.witnesses[x]) {
      if (a == sd.act.identity()) {
        if (sd.blowup[x] != x) return false;
      } else if (sd.blowup[x] != c.mul(x, sd.blowup[a])) {
        return false;
      }
    }
  }
  return true;
}

bool check_idempotent_blowup(const StableData& sd) {
  const Semigroup& c = sd.complex.semigroup;
  for (Elt e : idempotents(c)) {
    const Elt eb = sd.blowup[e];
    const Elt w = omega_power(c, eb);
    if (c.mul(w, eb) != w) return false;  // aperiodicity
    const Elt sq = c.mul(eb, eb);
    if (sd.green.h_class_of[sq] == sd.green.h_class_of[eb] && sq != eb) return false;
  }
  return true;
}

bool check_stabilizer_facts(const StableData& sd) {
  const Semigroup& c = sd.complex.semigroup;
  const auto m = c.order();
  for (Elt x = 0; x < m; ++x) {
    // (1) descent in the R-order
    if (!sd.green.r_below_eq(sd.stab[x], x)) return false;
    // (2) factorization through the blowup, and expansion
    const Elt e = sd.chosen_idempotent[x];
    const Elt expected = e == sd.act.identity()
                             ? sd.blowup[x]
                             : c.mul(sd.blowup[x], sd.stab[e]);
    if (sd.stab[x] != expected) return false;
    if (!sd.complex.subsets[x].subset_of(sd.complex.subsets[sd.stab[x]])) return false;
    // (3) aperiodicity of the pass as a map
    if (sd.stab[sd.closure[x]] != sd.closure[x]) return false;
    // (4) staying R-equivalent forces the same block
    if (sd.green.r_equiv(x, sd.stab[x]) &&
        sd.type2.block_of[x] != sd.type2.block_of[sd.stab[x]])
      return false;
    // (5) common fixed points with the blowup
    if ((sd.blowup[x] == x) != (sd.stab[x] == x)) return false;
  }
  return true;
}

bool check_stability(const StableData& sd) {
  const Semigroup& c = sd.complex.semigroup;
  for (Elt x : sd.fixed) {
    for (Elt y = 0; y < c.order(); ++y) {
      const Elt xy = c.mul(x, y);
      if (!sd.green.r_equiv(sd.stab[xy], xy) || !sd.green.r_equiv(xy, x)) continue;
      // Block action of y on the block of x must be defined, single-valued,
      // land on the block of xy, and that block must be stable.
      unsigned image = std::numeric_limits<unsigned>::max();
      for (Elt rep : sd.type2.blocks[sd.type2.block_of[x]]) {
        const Elt p = c.mul(rep, y);
        if (!sd.green.r_equiv(p, x)) continue;
        const unsigned b = sd.type2.block_of[p];
        if (image == std::numeric_limits<unsigned>::max())
          image = b;
        else if (image != b)
          return false;
      }
      if (image != sd.type2.block_of[xy]) return false;
      if (!sd.block_is_stable[image]) return false;
    }
  }
  return true;
}

}  // namespace pointlike
