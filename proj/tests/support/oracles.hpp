#pragma once

// Definition-level oracles, independent of the library's algorithms.  They
// work straight from the textbook definitions with plain std::set machinery
// and no memoization, so a library bug and an oracle bug would have to
// coincide to slip through.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pointlike/semigroup.hpp"

namespace oracles {

using pointlike::Elt;
using pointlike::Semigroup;

inline std::set<Elt> naive_right_ideal(const Semigroup& s, Elt x) {
  std::set<Elt> out{x};
  for (Elt t = 0; t < s.order(); ++t) out.insert(s.mul(x, t));
  return out;
}

inline std::set<Elt> naive_left_ideal(const Semigroup& s, Elt x) {
  std::set<Elt> out{x};
  for (Elt t = 0; t < s.order(); ++t) out.insert(s.mul(t, x));
  return out;
}

inline std::set<Elt> naive_two_sided_ideal(const Semigroup& s, Elt x) {
  std::set<Elt> out = naive_right_ideal(s, x);
  out.merge(naive_left_ideal(s, x));
  for (Elt a = 0; a < s.order(); ++a)
    for (Elt b = 0; b < s.order(); ++b) out.insert(s.mul(s.mul(a, x), b));
  return out;
}

template <typename KeyFn>
std::vector<std::vector<Elt>> naive_classes(const Semigroup& s, KeyFn key) {
  std::map<std::set<Elt>, std::vector<Elt>> by_key;
  std::vector<std::set<Elt>> order_seen;
  for (Elt x = 0; x < s.order(); ++x) {
    auto k = key(s, x);
    if (!by_key.count(k)) order_seen.push_back(k);
    by_key[k].push_back(x);
  }
  std::vector<std::vector<Elt>> out;
  for (const auto& k : order_seen) out.push_back(by_key[k]);
  return out;
}

inline std::vector<std::vector<Elt>> naive_r_classes(const Semigroup& s) {
  return naive_classes(s, [](const Semigroup& t, Elt x) { return naive_right_ideal(t, x); });
}

// Idempotent power by listing x, x^2, ... and scanning for xx = x.
inline Elt naive_omega(const Semigroup& s, Elt x) {
  std::vector<Elt> powers{x};
  while (true) {
    Elt next = s.mul(powers.back(), x);
    if (std::find(powers.begin(), powers.end(), next) != powers.end()) break;
    powers.push_back(next);
  }
  for (Elt p : powers)
    if (s.mul(p, p) == p) return p;
  return static_cast<Elt>(-1);  // unreachable in a finite semigroup
}

// All associative tables of the given order, by filtering every candidate.
// Only feasible for n <= 3; that is exactly what the counting tests need.
inline std::vector<std::vector<Elt>> brute_force_tables(std::size_t n) {
  std::vector<std::vector<Elt>> out;
  const std::size_t cells = n * n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Elt> t(cells);
    std::size_t c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      t[i] = static_cast<Elt>(c % n);
      c /= n;
    }
    if (!pointlike::find_associativity_failure(t, n)) out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<Elt> apply_permutation(const std::vector<Elt>& table, std::size_t n,
                                          const std::vector<Elt>& p) {
  std::vector<Elt> out(n * n);
  for (Elt i = 0; i < n; ++i)
    for (Elt j = 0; j < n; ++j) out[p[i] * n + p[j]] = p[table[i * n + j]];
  return out;
}

// Count isomorphism classes by collapsing whole orbits under relabeling.
inline std::size_t count_iso_classes(std::size_t n) {
  auto tables = brute_force_tables(n);
  std::set<std::vector<Elt>> seen;
  std::size_t classes = 0;
  std::vector<Elt> perm(n);
  for (const auto& t : tables) {
    if (seen.count(t)) continue;
    ++classes;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      seen.insert(apply_permutation(t, n, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return classes;
}

// All partitions of {0..m-1} as class-id vectors (restricted growth strings).
inline std::vector<std::vector<unsigned>> all_partitions(std::size_t m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> rgs(m, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned max_used) -> void {
    if (i == m) {
      out.push_back(rgs);
      return;
    }
    for (unsigned v = 0; v <= max_used + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_used, v));
    }
  };
  if (m == 0) return out;
  rec(rec, 1, 0);
  return out;
}

// Two-sided ideal generated by a seed element.
inline std::set<Elt> ideal_generated(const Semigroup& s, Elt seed) {
  std::set<Elt> w{seed};
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elt x : std::vector<Elt>(w.begin(), w.end()))
      for (Elt t = 0; t < s.order(); ++t)
        for (Elt p : {s.mul(x, t), s.mul(t, x)})
          if (w.insert(p).second) changed = true;
  }
  return w;
}

// Rees quotient by an ideal: the ideal collapses to a zero at the last index.
// Returns the quotient and the element map.
struct ReesQuotient {
  Semigroup semigroup;
  std::vector<Elt> image_of;  // ambient -> quotient
};

inline ReesQuotient rees_quotient(const Semigroup& s, const std::set<Elt>& ideal) {
  std::vector<Elt> rest;
  for (Elt x = 0; x < s.order(); ++x)
    if (!ideal.count(x)) rest.push_back(x);
  const Elt zero = static_cast<Elt>(rest.size());
  std::vector<Elt> image(s.order(), zero);
  for (Elt i = 0; i < rest.size(); ++i) image[rest[i]] = i;
  const std::size_t m = rest.size() + 1;
  std::vector<Elt> table(m * m, zero);
  for (Elt x = 0; x < s.order(); ++x)
    for (Elt y = 0; y < s.order(); ++y)
      table[image[x] * m + image[y]] = image[s.mul(x, y)];
  return ReesQuotient{Semigroup::from_table_unchecked(std::move(table), m), image};
}

// Smallest congruence containing the given pairs, as a class-id vector, and
// the quotient semigroup it induces.
struct CongruenceQuotient {
  Semigroup semigroup;
  std::vector<Elt> image_of;
};

inline CongruenceQuotient congruence_quotient(const Semigroup& s,
                                              const std::vector<std::pair<Elt, Elt>>& pairs) {
  const auto n = s.order();
  std::vector<Elt> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Elt x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](Elt a, Elt b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };
  for (auto [a, b] : pairs) unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y) {
        if (find(x) != find(y)) continue;
        for (Elt t = 0; t < n; ++t) {
          if (unite(s.mul(x, t), s.mul(y, t))) changed = true;
          if (unite(s.mul(t, x), s.mul(t, y))) changed = true;
        }
      }
  }
  std::map<Elt, Elt> roots;
  std::vector<Elt> image(n);
  for (Elt x = 0; x < n; ++x) {
    auto [it, fresh] = roots.emplace(find(x), static_cast<Elt>(roots.size()));
    image[x] = it->second;
  }
  const std::size_t m = roots.size();
  std::vector<Elt> table(m * m);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) table[image[x] * m + image[y]] = image[s.mul(x, y)];
  return CongruenceQuotient{Semigroup::from_table_unchecked(std::move(table), m), image};
}

}  // namespace oracles
