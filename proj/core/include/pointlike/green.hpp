#pragma once

#include <vector>

#include "pointlike/semigroup.hpp"

namespace pointlike {

// Green's relations of a finite semigroup.  Class ids are assigned in order
// of first occurrence by element index, so they are deterministic.
struct GreenData {
  std::vector<unsigned> r_class_of, l_class_of, h_class_of, j_class_of;
  std::vector<std::vector<Elt>> r_classes, l_classes, h_classes, j_classes;

  // leq[a][b]: class a lies below-or-equal class b in the respective order
  // (inclusion of principal ideals).  Reflexive and transitive.
  std::vector<std::vector<bool>> r_leq;
  std::vector<std::vector<bool>> j_leq;

  // A J-class is regular iff it contains an idempotent.
  std::vector<bool> j_regular;

  bool r_below_eq(Elt x, Elt y) const { return r_leq[r_class_of[x]][r_class_of[y]]; }
  bool r_equiv(Elt x, Elt y) const { return r_class_of[x] == r_class_of[y]; }
  bool r_strictly_below(Elt x, Elt y) const { return r_below_eq(x, y) && !r_equiv(x, y); }
  bool j_below_eq(Elt x, Elt y) const { return j_leq[j_class_of[x]][j_class_of[y]]; }
};

GreenData green(const Semigroup& s);

}  // namespace pointlike
