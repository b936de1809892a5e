#pragma once

#include <vector>

#include "pointlike/complex.hpp"
#include "pointlike/guards.hpp"

namespace pointlike {

// The ER construct of S: the least complex K such that for every idempotent
// E of K-as-a-semigroup, the union of E's type-II class (taken in that
// semigroup) is again a member of K.  Its members are exactly the
// ER-pointlike subsets of S.
struct ConstructResult {
  Complex complex;
  unsigned rounds = 0;                           // outer fixpoint passes
  std::vector<std::vector<Subset>> added_per_round;  // trace of new unions
};

ConstructResult construct_er(const Semigroup& s, const Guards& guards = {});

// S has only singleton pointlikes, i.e. the construct is trivial.
bool er_membership_via_points(const Semigroup& s, const Guards& guards = {});

// Inclusion-maximal members, canonical order.  Their downward closure plus
// the singletons recovers the whole complex.
std::vector<Subset> max_pointlikes(const ConstructResult& result);

}  // namespace pointlike
