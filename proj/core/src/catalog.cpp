#include "pointlike/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace pointlike {

namespace {

// Relabel the table by permutation p (element i becomes p[i]), flattened.
std::vector<Elt> relabel(const std::vector<Elt>& table, std::size_t n,
                         const std::vector<Elt>& p) {
  std::vector<Elt> inv(n);
  for (Elt i = 0; i < n; ++i) inv[p[i]] = i;
  std::vector<Elt> out(n * n);
  for (Elt i = 0; i < n; ++i)
    for (Elt j = 0; j < n; ++j) out[i * n + j] = p[table[inv[i] * n + inv[j]]];
  return out;
}

std::vector<Elt> canonical_of(const std::vector<Elt>& table, std::size_t n) {
  std::vector<Elt> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elt> best = table;
  bool first = true;
  do {
    auto cand = relabel(table, n, perm);
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Elt> transpose(const std::vector<Elt>& table, std::size_t n) {
  std::vector<Elt> out(n * n);
  for (Elt i = 0; i < n; ++i)
    for (Elt j = 0; j < n; ++j) out[i * n + j] = table[j * n + i];
  return out;
}

// Depth-first fill of the table with incremental associativity pruning: a
// partial table is abandoned as soon as some fully-determined triple fails.
void search_tables(std::size_t n, std::vector<int>& t, std::size_t pos,
                   std::vector<std::vector<Elt>>& out) {
  if (pos == n * n) {
    out.emplace_back(t.begin(), t.end());
    return;
  }
  auto at = [&](Elt x, Elt y) { return t[x * n + y]; };
  auto consistent = [&]() {
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y) {
        const int xy = at(x, y);
        if (xy < 0) continue;
        for (Elt z = 0; z < n; ++z) {
          const int yz = at(y, z);
          if (yz < 0) continue;
          const int a = at(static_cast<Elt>(xy), z);
          const int b = at(x, static_cast<Elt>(yz));
          if (a >= 0 && b >= 0 && a != b) return false;
        }
      }
    return true;
  };
  for (Elt v = 0; v < n; ++v) {
    t[pos] = static_cast<int>(v);
    if (consistent()) search_tables(n, t, pos + 1, out);
  }
  t[pos] = -1;
}

}  // namespace

std::vector<Elt> canonical_table(const Semigroup& s) {
  return canonical_of(s.table(), s.order());
}

std::vector<CatalogEntry> enumerate_catalog(std::size_t max_order, const Guards& guards) {
  if (max_order > guards.max_catalog_order)
    throw GuardExceeded("catalog order " + std::to_string(max_order) +
                        " exceeds max_catalog_order " +
                        std::to_string(guards.max_catalog_order));
  std::vector<CatalogEntry> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::vector<std::vector<Elt>> tables;
    std::vector<int> partial(n * n, -1);
    search_tables(n, partial, 0, tables);

    std::map<std::vector<Elt>, unsigned> canon_ids;
    std::vector<std::vector<Elt>> canons;
    for (const auto& t : tables) {
      auto c = canonical_of(t, n);
      if (canon_ids.emplace(c, static_cast<unsigned>(canons.size())).second)
        canons.push_back(std::move(c));
    }
    // std::map iteration gave first-seen ids; re-issue them in sorted order.
    std::sort(canons.begin(), canons.end());
    canon_ids.clear();
    for (unsigned i = 0; i < canons.size(); ++i) canon_ids[canons[i]] = i;

    for (unsigned i = 0; i < canons.size(); ++i) {
      CatalogEntry entry{Semigroup::from_table_unchecked(canons[i], n), i, std::nullopt};
      const auto opposite = canonical_of(transpose(canons[i], n), n);
      const unsigned partner = canon_ids.at(opposite);
      if (partner != i) entry.anti_iso_partner = partner;
      out.push_back(std::move(entry));
    }
  }
  return out;
}

}  // namespace pointlike
