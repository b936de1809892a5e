#include "pointlike/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace pointlike {

namespace {

void require_subset_universe(const Semigroup& s) {
  if (s.order() > kMaxSubsetUniverse)
    throw GuardExceeded("ambient order exceeds the subset universe");
}

void require_power_guard(const Semigroup& s, const Guards& guards) {
  require_subset_universe(s);
  if (s.order() > guards.max_order)
    throw GuardExceeded("ambient order " + std::to_string(s.order()) +
                        " exceeds max_order " + std::to_string(guards.max_order) +
                        " for power-semigroup work");
}

std::string complex_size_message(std::size_t size, const Guards& guards) {
  return "complex size " + std::to_string(size) + " exceeds max_complex_size " +
         std::to_string(guards.max_complex_size);
}

}  // namespace

Subset setwise_product(const Semigroup& s, Subset x, Subset y) {
  require_subset_universe(s);
  if (x.empty() || y.empty()) throw std::invalid_argument("subsets must be non-empty");
  if (!x.subset_of(Subset::full(s.order())) || !y.subset_of(Subset::full(s.order())))
    throw std::invalid_argument("subset does not live over this semigroup");
  Subset out;
  for (Elt a : x.elements()) {
    const Elt* row = s.table().data() + a * s.order();
    for (Elt b : y.elements()) out.bits |= std::uint64_t{1} << row[b];
  }
  return out;
}

Complex::Complex(Semigroup ambient, std::vector<Subset> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {}

bool Complex::contains(Subset x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

Complex Complex::close(const Semigroup& ambient, const std::vector<Subset>& gens,
                       const Guards& guards) {
  require_power_guard(ambient, guards);
  std::set<Subset> members;
  for (Elt x = 0; x < ambient.order(); ++x) members.insert(Subset::single(x));
  for (Subset g : gens) {
    if (g.empty()) throw std::invalid_argument("generators must be non-empty");
    if (!g.subset_of(Subset::full(ambient.order())))
      throw std::invalid_argument("generator contains out-of-range elements");
    members.insert(g);
  }

  if (members.size() > guards.max_complex_size)
    throw GuardExceeded(complex_size_message(members.size(), guards));

  // Saturate: both closure conditions interact, so alternate product and
  // downward passes until neither adds anything.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Subset> snapshot(members.begin(), members.end());
    for (Subset x : snapshot)
      for (Subset y : snapshot)
        if (members.insert(setwise_product(ambient, x, y)).second) changed = true;
    snapshot.assign(members.begin(), members.end());
    for (Subset x : snapshot) {
      // Proper non-empty submasks.
      for (std::uint64_t sub = (x.bits - 1) & x.bits; sub != 0; sub = (sub - 1) & x.bits)
        if (members.insert(Subset{sub}).second) changed = true;
    }
    if (members.size() > guards.max_complex_size)
      throw GuardExceeded(complex_size_message(members.size(), guards));
  }
  return Complex(ambient, std::vector<Subset>(members.begin(), members.end()));
}

Complex Complex::from_members_certified(const Semigroup& ambient,
                                        std::vector<Subset> members) {
  require_subset_universe(ambient);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::set<Subset> set(members.begin(), members.end());
  for (Elt x = 0; x < ambient.order(); ++x)
    if (!set.count(Subset::single(x)))
      throw InternalError("complex certification: missing singleton");
  for (Subset x : members) {
    if (x.empty()) throw InternalError("complex certification: empty member");
    for (std::uint64_t sub = (x.bits - 1) & x.bits; sub != 0; sub = (sub - 1) & x.bits)
      if (!set.count(Subset{sub}))
        throw InternalError("complex certification: not downward closed");
  }
  for (Subset x : members)
    for (Subset y : members)
      if (!set.count(setwise_product(ambient, x, y)))
        throw InternalError("complex certification: not product closed");
  return Complex(ambient, std::move(members));
}

Complex complex_join(const Complex& k1, const Complex& k2, const Guards& guards) {
  if (!k1.ambient().same_table(k2.ambient()))
    throw std::invalid_argument("complex_join: ambient semigroups differ");
  std::vector<Subset> gens = k1.members();
  gens.insert(gens.end(), k2.members().begin(), k2.members().end());
  return Complex::close(k1.ambient(), gens, guards);
}

Complex complex_meet(const Complex& k1, const Complex& k2) {
  if (!k1.ambient().same_table(k2.ambient()))
    throw std::invalid_argument("complex_meet: ambient semigroups differ");
  std::vector<Subset> both;
  std::set_intersection(k1.members().begin(), k1.members().end(), k2.members().begin(),
                        k2.members().end(), std::back_inserter(both));
  return Complex::from_members_certified(k1.ambient(), std::move(both));
}

Elt AbstractComplex::index_of(Subset x) const {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), x);
  if (it == subsets.end() || !(*it == x))
    throw std::out_of_range("subset is not a member of the complex");
  return static_cast<Elt>(it - subsets.begin());
}

bool AbstractComplex::contains(Subset x) const {
  return std::binary_search(subsets.begin(), subsets.end(), x);
}

AbstractComplex as_abstract_semigroup(const Complex& k, const Guards& guards) {
  const auto& members = k.members();
  const auto m = members.size();
  if (m > guards.max_complex_size)
    throw GuardExceeded(complex_size_message(m, guards));

  std::vector<Elt> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Subset p = setwise_product(k.ambient(), members[i], members[j]);
      auto it = std::lower_bound(members.begin(), members.end(), p);
      if (it == members.end() || !(*it == p))
        throw InternalError("complex is not product closed");
      table[i * m + j] = static_cast<Elt>(it - members.begin());
    }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Subset x : members) labels.push_back(render_subset(k.ambient(), x));
  return AbstractComplex{
      Semigroup::from_table_unchecked(std::move(table), m, std::move(labels)), members};
}

std::string render_subset(const Semigroup& ambient, Subset x) {
  std::string out = "{";
  bool first = true;
  for (Elt e : x.elements()) {
    if (!first) out += ", ";
    out += ambient.label(e);
    first = false;
  }
  return out + "}";
}

}  // namespace pointlike
