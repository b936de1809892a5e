#include "pointlike/green.hpp"

#include <cstdint>
#include <map>

namespace pointlike {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }

void set_bit(Bits& b, Elt x) { b[x / 64] |= std::uint64_t{1} << (x % 64); }


bool subset_eq(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void merge_into(Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

// Assigns class ids in order of first occurrence by element index.
struct Classifier {
  std::map<Bits, unsigned> ids;
  std::vector<unsigned> class_of;
  std::vector<std::vector<Elt>> classes;

  void add(Elt x, const Bits& key) {
    auto [it, fresh] = ids.emplace(key, static_cast<unsigned>(classes.size()));
    if (fresh) classes.emplace_back();
    class_of.push_back(it->second);
    classes[it->second].push_back(x);
  }
};

}  // namespace

GreenData green(const Semigroup& s) {
  const auto n = s.order();

  // Principal ideals as bit sets.
  std::vector<Bits> right(n), left(n), two(n);
  for (Elt x = 0; x < n; ++x) {
    right[x] = make_bits(n);
    set_bit(right[x], x);
    for (Elt t = 0; t < n; ++t) set_bit(right[x], s.mul(x, t));
    left[x] = make_bits(n);
    set_bit(left[x], x);
    for (Elt t = 0; t < n; ++t) set_bit(left[x], s.mul(t, x));
  }
  for (Elt x = 0; x < n; ++x) {
    two[x] = right[x];
    merge_into(two[x], left[x]);
    for (Elt a = 0; a < n; ++a) merge_into(two[x], right[s.mul(a, x)]);
  }

  GreenData g;
  Classifier r, l, j;
  for (Elt x = 0; x < n; ++x) {
    r.add(x, right[x]);
    l.add(x, left[x]);
    j.add(x, two[x]);
  }
  g.r_class_of = std::move(r.class_of);
  g.r_classes = std::move(r.classes);
  g.l_class_of = std::move(l.class_of);
  g.l_classes = std::move(l.classes);
  g.j_class_of = std::move(j.class_of);
  g.j_classes = std::move(j.classes);

  // H = R meet L.
  std::map<std::pair<unsigned, unsigned>, unsigned> hids;
  for (Elt x = 0; x < n; ++x) {
    auto key = std::make_pair(g.r_class_of[x], g.l_class_of[x]);
    auto [it, fresh] = hids.emplace(key, static_cast<unsigned>(g.h_classes.size()));
    if (fresh) g.h_classes.emplace_back();
    g.h_class_of.push_back(it->second);
    g.h_classes[it->second].push_back(x);
  }

  const auto rk = g.r_classes.size(), jk = g.j_classes.size();
  g.r_leq.assign(rk, std::vector<bool>(rk, false));
  for (std::size_t a = 0; a < rk; ++a)
    for (std::size_t b = 0; b < rk; ++b)
      g.r_leq[a][b] = subset_eq(right[g.r_classes[a][0]], right[g.r_classes[b][0]]);
  g.j_leq.assign(jk, std::vector<bool>(jk, false));
  for (std::size_t a = 0; a < jk; ++a)
    for (std::size_t b = 0; b < jk; ++b)
      g.j_leq[a][b] = subset_eq(two[g.j_classes[a][0]], two[g.j_classes[b][0]]);

  g.j_regular.assign(jk, false);
  for (Elt x = 0; x < n; ++x)
    if (s.mul(x, x) == x) g.j_regular[g.j_class_of[x]] = true;

  return g;
}

}  // namespace pointlike
