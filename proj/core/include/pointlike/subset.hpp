#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "pointlike/semigroup.hpp"

namespace pointlike {

// Largest ambient order a Subset can represent.  Power-semigroup work is
// guarded well below this (Guards::max_order).
inline constexpr std::size_t kMaxSubsetUniverse = 64;

// Non-empty subset of a semigroup's elements, packed as a bit mask.
// operator< is the canonical order (cardinality, then bit pattern), which
// makes every sorted container of subsets deterministic.
struct Subset {
  std::uint64_t bits = 0;

  static Subset single(Elt x) { return Subset{std::uint64_t{1} << x}; }
  static Subset of(const std::vector<Elt>& elts) {
    Subset s;
    for (Elt x : elts) s.bits |= std::uint64_t{1} << x;
    return s;
  }
  static Subset full(std::size_t n) {
    return Subset{n == kMaxSubsetUniverse ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << n) - 1};
  }

  bool empty() const { return bits == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  bool contains(Elt x) const { return (bits >> x) & 1; }
  bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
  bool is_singleton() const { return std::has_single_bit(bits); }

  std::vector<Elt> elements() const {
    std::vector<Elt> out;
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
      out.push_back(static_cast<Elt>(std::countr_zero(b)));
    return out;
  }

  friend Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
  friend Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }

  bool operator==(const Subset&) const = default;
  friend bool operator<(Subset a, Subset b) {
    auto ka = a.size(), kb = b.size();
    return ka != kb ? ka < kb : a.bits < b.bits;
  }
};

// "{a, b}" using the ambient's element labels.
std::string render_subset(const Semigroup& ambient, Subset x);

}  // namespace pointlike
