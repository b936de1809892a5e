#pragma once

#include <vector>

#include "pointlike/activator.hpp"
#include "pointlike/complex.hpp"
#include "pointlike/construct.hpp"
#include "pointlike/green.hpp"
#include "pointlike/kernel.hpp"

namespace pointlike {

// Stabilization data over C := the ER construct of S, realized as a
// semigroup.  All Elt values below index into complex.semigroup.
//
//   blowup[X]:  union of the type-II block of X; contains X, R-below X.
//   stab[X]:    X times the idempotent power of the blown-up chosen
//               activator idempotent; one stabilization pass.
//   closure[X]: stab iterated to its fixpoint.
//
// fixed lists the common fixed points of blowup and stab; stable_blocks are
// the type-II blocks whose union is one of their own members; and
// stable_r_classes are the R-classes of C containing a fixed point.
struct StableData {
  AbstractComplex complex;
  GreenData green;
  TypeIIData type2;
  ActivatorData act;

  std::vector<Elt> chosen_idempotent;  // per X, index into act.lifted
  std::vector<Elt> blowup;
  std::vector<Elt> stab;
  std::vector<Elt> closure;

  std::vector<Elt> fixed;  // ascending
  std::vector<bool> is_fixed;
  std::vector<unsigned> stable_blocks;  // block ids, ascending
  std::vector<bool> block_is_stable;
  std::vector<unsigned> stable_r_classes;  // R-class ids of C, ascending

  // The chosen idempotent may be the adjoined identity of act.lifted
  // (exactly when the witness set is {I}); stab fixes X in that case.
  bool chose_identity(Elt x) const { return chosen_idempotent[x] == act.identity(); }
};

// Rule for picking the chosen idempotent among a witness set.  The default
// takes the canonically smallest; the alternate takes the largest and exists
// to observe that the final answer does not depend on the choice.
enum class IdempotentChoice { kCanonicalMin, kCanonicalMax };

StableData build_stable(const Semigroup& s, const ConstructResult& cr,
                        const Guards& guards = {},
                        IdempotentChoice choice = IdempotentChoice::kCanonicalMin);

// X is contained in blowup[X], blowup[X] is R-below X, and blowup factors
// through any activator witness: blowup[X] = X * blowup[A].
bool check_blowup(const StableData& sd);

// Blown-up idempotents are aperiodic, and their square collapses whenever it
// stays in the same H-class.
bool check_idempotent_blowup(const StableData& sd);

// The five facts about the stabilization pass: R-descent, expansion and
// factorization, aperiodicity of the pass as a map, block-preservation on
// R-equivalent stabilization, and fixed points agreeing with blowup's.
bool check_stabilizer_facts(const StableData& sd);

// For fixed X and any Y with stab(XY) R XY R X, the block of XY is the block
// of X translated by Y and is itself stable.
bool check_stability(const StableData& sd);

}  // namespace pointlike
