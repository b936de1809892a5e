#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pointlike {

// Elements are dense 0-based indices into the Cayley table.
using Elt = unsigned;

// First associativity failure of a candidate table: (x*y)*z != x*(y*z).
struct AssociativityFailure {
  Elt x, y, z;
};

std::optional<AssociativityFailure> find_associativity_failure(
    const std::vector<Elt>& table, std::size_t order);

// A finite semigroup as an n x n Cayley table, row = left factor.
// Labels are presentation-only and never affect the algebra.
class Semigroup {
 public:
  // The one-element semigroup.
  Semigroup() : n_(1), table_{0} {}

  // Validates entry range and associativity; throws std::invalid_argument.
  static Semigroup from_table(std::vector<Elt> table, std::size_t order,
                              std::vector<std::string> labels = {});
  static Semigroup from_rows(const std::vector<std::vector<Elt>>& rows,
                             std::vector<std::string> labels = {});
  // For tables associative by construction (function composition, setwise
  // products).  Range is still validated.
  static Semigroup from_table_unchecked(std::vector<Elt> table, std::size_t order,
                                        std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  Elt mul(Elt x, Elt y) const;  // throws std::out_of_range on bad indices

  const std::vector<Elt>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elt x) const;

  // Algebra-level identity: same order and table (labels ignored).
  bool same_table(const Semigroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }
  bool operator==(const Semigroup&) const = default;

 private:
  Semigroup(std::size_t n, std::vector<Elt> table, std::vector<std::string> labels);

  std::size_t n_;
  std::vector<Elt> table_;
  std::vector<std::string> labels_;
};

// The unique idempotent power of x.
Elt omega_power(const Semigroup& s, Elt x);

// E(S), ascending.
std::vector<Elt> idempotents(const Semigroup& s);

// S with a new two-sided identity adjoined at index order().
Semigroup adjoin_identity(const Semigroup& s);

// Smallest product-closed superset of gens, ascending.  gens must be non-empty.
std::vector<Elt> subsemigroup_generated(const Semigroup& s, const std::vector<Elt>& gens);

// A product-closed subset realized as a semigroup of its own.
struct SubSemigroup {
  Semigroup semigroup;
  std::vector<Elt> elements;  // sub index -> ambient index, ascending
};
SubSemigroup restrict_to(const Semigroup& s, const std::vector<Elt>& elements);

// Every R-class is a singleton.
bool is_r_trivial(const Semigroup& s);

// The idempotent-generated subsemigroup <E(S)> is R-trivial, with Green's
// relations taken inside that subsemigroup.
bool is_in_er(const Semigroup& s);

}  // namespace pointlike
