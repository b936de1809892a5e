#pragma once

#include <limits>
#include <vector>

#include "pointlike/activator.hpp"
#include "pointlike/green.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

// Group kernel K_G(S): the least subsemigroup containing E(S) and closed
// under weak conjugation (s in K, xyx = x  =>  xsy, ysx in K).  Ascending.
std::vector<Elt> group_kernel(const Semigroup& s);

// The type-II partition: x ~ y iff xa = y and yb = x for some a, b in
// K_G(S) adjoined an identity.  Each block sits inside one R-class, and
// K_G(S) meets an R-class in either nothing or exactly one block.
struct TypeIIData {
  std::vector<Elt> kernel;                            // K_G(S), ascending
  std::vector<unsigned> block_of;                     // element -> block id
  std::vector<std::vector<Elt>> blocks;               // ids by smallest member
  std::vector<std::vector<unsigned>> blocks_of_r_class;  // per R-class id
};

TypeIIData type2_partition(const Semigroup& s, const GreenData& g);
TypeIIData type2_partition(const Semigroup& s);

// The quotient of the partial action of S on one R-class by the type-II
// partition.  Always well-defined and injective; either failing throws
// InternalError.
struct QuotientPts {
  static constexpr unsigned kUndefined = std::numeric_limits<unsigned>::max();

  std::vector<unsigned> states;               // block ids, ascending
  std::vector<std::vector<unsigned>> action;  // [state pos][letter] -> state pos

  unsigned pos_of_block(unsigned block) const;
};

QuotientPts quotient_pts(const Semigroup& s, unsigned r_class, const GreenData& g,
                         const TypeIIData& t2);

// Kernel elements act as partial identities on every quotient.
bool check_kernel_partial_identity(const Semigroup& s, const GreenData& g,
                                   const TypeIIData& t2);

// Activator witnesses translate type-II blocks: x.[t] = [x] for t in the
// witness set of x; x.[s] = [xs] for s R t; and [s] -> [xs] is a surjective
// morphism of quotient actions from the R-class of t onto that of x.
bool check_activator_block_action(const Semigroup& s, const GreenData& g,
                                  const TypeIIData& t2, const ActivatorData& act);

// S lies in ER iff every letter acts on every R-class by a partial injection.
bool is_in_er_via_injectivity(const Semigroup& s);

}  // namespace pointlike
