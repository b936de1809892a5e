#pragma once

#include <optional>
#include <vector>

#include "pointlike/guards.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

// Lexicographically least table among all relabelings of S.
std::vector<Elt> canonical_table(const Semigroup& s);

// One isomorphism class of semigroups of some order.
struct CatalogEntry {
  Semigroup semigroup;  // canonical table
  unsigned id = 0;      // index within its order
  // Entry id of the opposite semigroup's class when it differs from this one.
  std::optional<unsigned> anti_iso_partner;
};

// All semigroups of order 1..max_order up to isomorphism, found by
// backtracking over partial tables with incremental associativity pruning,
// then deduplicated by canonical form.  Ordered by (order, canonical table).
std::vector<CatalogEntry> enumerate_catalog(std::size_t max_order,
                                            const Guards& guards = {});

}  // namespace pointlike
