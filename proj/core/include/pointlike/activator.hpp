#pragma once

#include <vector>

#include "pointlike/green.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

// Right activators.  For a J-class J of S, the right activator RACT(J) is the
// unique J-minimal J-class of S^I among {a : Ja meets J}; it is regular, and
// equals J exactly when J is regular.  For each x, witnesses(x) is the set of
// t in RACT(J_x) with xt = x, with xs strictly R-below x iff ts strictly
// R-below t, and with left multiplication by x mapping the R-class of t onto
// the R-class of x.  Every witness set contains an idempotent.
//
// All activator elements are indices into `lifted` (= S with an identity
// adjoined at index s.order()).
struct ActivatorData {
  Semigroup lifted;
  GreenData lifted_green;
  std::vector<std::vector<Elt>> ract;       // per J-class of S, ascending
  std::vector<std::vector<Elt>> witnesses;  // per element of S, ascending

  Elt identity() const { return static_cast<Elt>(lifted.order() - 1); }
};

ActivatorData activators(const Semigroup& s, const GreenData& g);

}  // namespace pointlike
