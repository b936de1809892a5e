#pragma once

#include <vector>

#include "pointlike/guards.hpp"
#include "pointlike/subset.hpp"

namespace pointlike {

// Setwise product {xy : x in X, y in Y}.  Never empty.
Subset setwise_product(const Semigroup& s, Subset x, Subset y);

// A complex over S: a set of non-empty subsets containing all singletons,
// closed under setwise products and under non-empty subsets of members.
// Members are kept in canonical subset order.
class Complex {
 public:
  // The singleton complex over the one-element semigroup.
  Complex() : members_{Subset::single(0)} {}

  // Smallest complex containing gens (worklist saturation alternating
  // product closure and downward closure).
  static Complex close(const Semigroup& ambient, const std::vector<Subset>& gens,
                       const Guards& guards = {});

  // Wraps an already-closed member list; certifies all three complex
  // invariants and throws InternalError on violation.
  static Complex from_members_certified(const Semigroup& ambient,
                                        std::vector<Subset> members);

  const Semigroup& ambient() const { return ambient_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Subset x) const;
  bool singletons_only() const { return members_.size() == ambient_.order(); }

  bool operator==(const Complex& other) const {
    return ambient_.same_table(other.ambient_) && members_ == other.members_;
  }

 private:
  Complex(Semigroup ambient, std::vector<Subset> members);

  Semigroup ambient_;
  std::vector<Subset> members_;  // canonical order
};

// Least upper bound in the lattice of complexes over a shared ambient.
Complex complex_join(const Complex& k1, const Complex& k2, const Guards& guards = {});

// Member intersection; always a complex.
Complex complex_meet(const Complex& k1, const Complex& k2);

// A complex realized as a semigroup of its own, with index maps both ways.
// Element i multiplies as the setwise product of subsets[i].
struct AbstractComplex {
  Semigroup semigroup;
  std::vector<Subset> subsets;  // element index -> member, canonical order

  Elt index_of(Subset x) const;  // throws std::out_of_range if not a member
  bool contains(Subset x) const;
};

AbstractComplex as_abstract_semigroup(const Complex& k, const Guards& guards = {});

}  // namespace pointlike
