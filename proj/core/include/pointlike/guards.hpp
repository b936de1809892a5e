#pragma once

#include <cstddef>
#include <stdexcept>

namespace pointlike {

// Size limits for the subset-lattice constructions.  Exceeding one raises
// GuardExceeded instead of grinding through an astronomically large case.
struct Guards {
  std::size_t max_order = 8;              // ambient order for power-semigroup work
  std::size_t max_complex_size = 4096;    // members of a complex
  std::size_t max_group_size = 100000;    // elements of the global permutation group
  std::size_t max_states = 100000;        // automaton states
  std::size_t max_semigroup_size = 100000;  // transition-semigroup closure
  std::size_t max_catalog_order = 4;      // exhaustive enumeration bound
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A machine-checked fact failed.  Every throw site corresponds to a property
// that holds for all finite semigroups, so seeing this means the library has
// a bug, not that the input is bad.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pointlike
