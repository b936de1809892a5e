#include "pointlike/construct.hpp"

#include <algorithm>
#include <set>

#include "pointlike/kernel.hpp"

namespace pointlike {

ConstructResult construct_er(const Semigroup& s, const Guards& guards) {
  Complex k = Complex::close(s, {}, guards);
  unsigned rounds = 0;
  std::vector<std::vector<Subset>> trace;

  while (true) {
    ++rounds;
    // The modulus is evaluated on the complex itself: type-II classes of
    // idempotents of K-as-a-semigroup, not of S.
    const AbstractComplex a = as_abstract_semigroup(k, guards);
    const TypeIIData t2 = type2_partition(a.semigroup);

    std::set<Subset> additions;
    for (Elt e : idempotents(a.semigroup)) {
      Subset u;
      for (Elt member : t2.blocks[t2.block_of[e]]) u = u | a.subsets[member];
      if (!k.contains(u)) additions.insert(u);
    }
    if (additions.empty()) break;

    trace.emplace_back(additions.begin(), additions.end());
    std::vector<Subset> gens = k.members();
    gens.insert(gens.end(), additions.begin(), additions.end());
    k = Complex::close(s, gens, guards);
  }
  return ConstructResult{std::move(k), rounds, std::move(trace)};
}

bool er_membership_via_points(const Semigroup& s, const Guards& guards) {
  return construct_er(s, guards).complex.singletons_only();
}

std::vector<Subset> max_pointlikes(const ConstructResult& result) {
  const auto& members = result.complex.members();
  std::vector<Subset> out;
  for (Subset x : members) {
    bool maximal = true;
    for (Subset y : members)
      if (!(x == y) && x.subset_of(y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;  // members are canonically ordered already
}

}  // namespace pointlike
