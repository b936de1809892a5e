#include "pointlike/semigroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "pointlike/green.hpp"

namespace pointlike {

std::optional<AssociativityFailure> find_associativity_failure(
    const std::vector<Elt>& table, std::size_t order) {
  const auto n = order;
  auto at = [&](Elt x, Elt y) { return table[x * n + y]; };
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      const Elt xy = at(x, y);
      for (Elt z = 0; z < n; ++z)
        if (at(xy, z) != at(x, at(y, z))) return AssociativityFailure{x, y, z};
    }
  return std::nullopt;
}

namespace {

void validate_shape(const std::vector<Elt>& table, std::size_t n,
                    const std::vector<std::string>& labels) {
  if (n == 0) throw std::invalid_argument("semigroup order must be positive");
  if (table.size() != n * n)
    throw std::invalid_argument("table size does not match order");
  for (Elt v : table)
    if (v >= n) throw std::invalid_argument("table entry out of range");
  if (!labels.empty() && labels.size() != n)
    throw std::invalid_argument("label count does not match order");
}

}  // namespace

Semigroup::Semigroup(std::size_t n, std::vector<Elt> table, std::vector<std::string> labels)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)) {}

Semigroup Semigroup::from_table(std::vector<Elt> table, std::size_t order,
                                std::vector<std::string> labels) {
  validate_shape(table, order, labels);
  if (auto fail = find_associativity_failure(table, order))
    throw std::invalid_argument("table is not associative at (" +
                                std::to_string(fail->x) + ", " + std::to_string(fail->y) +
                                ", " + std::to_string(fail->z) + ")");
  return Semigroup(order, std::move(table), std::move(labels));
}

Semigroup Semigroup::from_rows(const std::vector<std::vector<Elt>>& rows,
                               std::vector<std::string> labels) {
  std::vector<Elt> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      throw std::invalid_argument("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_table(std::move(flat), rows.size(), std::move(labels));
}

Semigroup Semigroup::from_table_unchecked(std::vector<Elt> table, std::size_t order,
                                          std::vector<std::string> labels) {
  validate_shape(table, order, labels);
  return Semigroup(order, std::move(table), std::move(labels));
}

Elt Semigroup::mul(Elt x, Elt y) const {
  if (x >= n_ || y >= n_) throw std::out_of_range("element index out of range");
  return table_[x * n_ + y];
}

std::string Semigroup::label(Elt x) const {
  if (x < labels_.size() && !labels_[x].empty()) return labels_[x];
  return std::to_string(x);
}

Elt omega_power(const Semigroup& s, Elt x) {
  if (x >= s.order()) throw std::out_of_range("element index out of range");
  // Walk x, x^2, ... until the cycle closes; the unique idempotent power
  // shows up along the way.
  std::vector<bool> seen(s.order(), false);
  Elt p = x;
  while (!seen[p]) {
    if (s.mul(p, p) == p) return p;
    seen[p] = true;
    p = s.mul(p, x);
  }
  // Continue around the cycle; a finite cyclic semigroup has an idempotent.
  Elt q = p;
  do {
    if (s.mul(q, q) == q) return q;
    q = s.mul(q, x);
  } while (q != p);
  throw std::logic_error("cyclic subsemigroup without idempotent");
}

std::vector<Elt> idempotents(const Semigroup& s) {
  std::vector<Elt> out;
  for (Elt x = 0; x < s.order(); ++x)
    if (s.mul(x, x) == x) out.push_back(x);
  return out;
}

Semigroup adjoin_identity(const Semigroup& s) {
  const auto n = s.order();
  std::vector<Elt> table((n + 1) * (n + 1));
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) table[x * (n + 1) + y] = s.mul(x, y);
    table[x * (n + 1) + n] = x;
    table[n * (n + 1) + x] = x;
  }
  table[n * (n + 1) + n] = static_cast<Elt>(n);
  std::vector<std::string> labels;
  if (!s.labels().empty()) {
    labels = s.labels();
    labels.push_back("I");
  }
  return Semigroup::from_table_unchecked(std::move(table), n + 1, std::move(labels));
}

std::vector<Elt> subsemigroup_generated(const Semigroup& s, const std::vector<Elt>& gens) {
  if (gens.empty()) throw std::invalid_argument("generator set must be non-empty");
  std::vector<bool> in(s.order(), false);
  std::vector<Elt> work;
  for (Elt g : gens) {
    if (g >= s.order()) throw std::out_of_range("generator out of range");
    if (!in[g]) {
      in[g] = true;
      work.push_back(g);
    }
  }
  std::vector<Elt> members = work;
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (Elt p : {s.mul(work[i], members[j]), s.mul(members[j], work[i])}) {
        if (!in[p]) {
          in[p] = true;
          work.push_back(p);
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

SubSemigroup restrict_to(const Semigroup& s, const std::vector<Elt>& elements) {
  std::map<Elt, Elt> index;
  for (Elt e : elements) index.emplace(e, static_cast<Elt>(index.size()));
  const auto m = elements.size();
  std::vector<Elt> table(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Elt p = s.mul(elements[i], elements[j]);
      auto it = index.find(p);
      if (it == index.end())
        throw std::invalid_argument("element set is not product-closed");
      table[i * m + j] = it->second;
    }
    labels.push_back(s.label(elements[i]));
  }
  return SubSemigroup{Semigroup::from_table_unchecked(std::move(table), m, std::move(labels)),
                      elements};
}

bool is_r_trivial(const Semigroup& s) {
  for (const auto& cls : green(s).r_classes)
    if (cls.size() > 1) return false;
  return true;
}

bool is_in_er(const Semigroup& s) {
  // Green's data of the idempotent-generated subsemigroup is intrinsic to
  // it, never inherited from the ambient semigroup.
  const auto sub = restrict_to(s, subsemigroup_generated(s, idempotents(s)));
  return is_r_trivial(sub.semigroup);
}

}  // namespace pointlike
