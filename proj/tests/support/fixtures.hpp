#pragma once

#include <vector>

#include "pointlike/semigroup.hpp"

// Named semigroups used across the suites.  Tables are spelled out so the
// tests do not depend on any library construction beyond from_rows.
namespace fixtures {

using pointlike::Semigroup;

// All maps on a two-point set, composed left to right: id, the swap, and the
// two constant maps.
inline Semigroup t2() {
  return Semigroup::from_rows(
      {{0, 1, 2, 3}, {1, 0, 2, 3}, {2, 3, 2, 3}, {3, 2, 2, 3}},
      {"id", "swap", "c1", "c2"});
}

// 2x2 matrix units with zero: e11, e12, e21, e22, z.
inline Semigroup b2() {
  return Semigroup::from_rows({{0, 1, 4, 4, 4},
                               {4, 4, 0, 1, 4},
                               {2, 3, 4, 4, 4},
                               {4, 4, 2, 3, 4},
                               {4, 4, 4, 4, 4}},
                              {"e11", "e12", "e21", "e22", "z"});
}

inline Semigroup c2() { return Semigroup::from_rows({{0, 1}, {1, 0}}, {"e", "g"}); }

inline Semigroup c3() {
  return Semigroup::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {"e", "g", "g2"});
}

inline Semigroup c2c2() {
  return Semigroup::from_rows({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                              {"e", "a", "b", "ab"});
}

// Null semigroup {a, z}: every product is z.
inline Semigroup n2() { return Semigroup::from_rows({{1, 1}, {1, 1}}, {"a", "z"}); }

inline Semigroup left_zero2() { return Semigroup::from_rows({{0, 0}, {1, 1}}, {"a", "b"}); }

inline Semigroup right_zero2() { return Semigroup::from_rows({{0, 1}, {0, 1}}, {"a", "b"}); }

inline Semigroup trivial() { return Semigroup::from_rows({{0}}); }

}  // namespace fixtures
