#include "pointlike/activator.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pointlike/guards.hpp"

namespace pointlike {

ActivatorData activators(const Semigroup& s, const GreenData& g) {
  const auto n = s.order();
  ActivatorData out{adjoin_identity(s), {}, {}, {}};
  out.lifted_green = green(out.lifted);
  const auto& lg = out.lifted_green;
  const auto& t = out.lifted;

  out.ract.resize(g.j_classes.size());
  for (unsigned jc = 0; jc < g.j_classes.size(); ++jc) {
    const auto& jcls = g.j_classes[jc];
    // Candidates a in S^I with Ja meeting J.  The set is a union of
    // J-classes of S^I with a unique minimal one, the right activator.
    std::set<unsigned> candidate_classes;
    std::vector<bool> candidate(t.order(), false);
    for (Elt a = 0; a < t.order(); ++a) {
      for (Elt x : jcls) {
        const Elt p = t.mul(x, a);
        if (p < n && g.j_class_of[p] == jc) {
          candidate[a] = true;
          candidate_classes.insert(lg.j_class_of[a]);
          break;
        }
      }
    }
    for (unsigned c : candidate_classes)
      for (Elt a : lg.j_classes[c])
        if (!candidate[a])
          throw InternalError("activator candidate set is not a union of J-classes");
    std::vector<unsigned> minimal;
    for (unsigned c : candidate_classes) {
      bool is_min = true;
      for (unsigned d : candidate_classes)
        if (d != c && lg.j_leq[d][c]) is_min = false;
      if (is_min) minimal.push_back(c);
    }
    if (minimal.size() != 1)
      throw InternalError("right activator is not unique for J-class " + std::to_string(jc));
    out.ract[jc] = lg.j_classes[minimal[0]];

    if (!lg.j_regular[minimal[0]])
      throw InternalError("right activator J-class is not regular");
    // A regular J-class of S is its own activator.
    if (g.j_regular[jc]) {
      std::vector<Elt> as_lifted(jcls.begin(), jcls.end());
      if (out.ract[jc] != as_lifted)
        throw InternalError("regular J-class differs from its activator");
    }
  }

  // Witness sets: all three clauses of the activator property, checked in
  // the lifted semigroup (where R- and J-data of S-elements coincide with
  // their data in S).
  out.witnesses.resize(n);
  for (Elt x = 0; x < n; ++x) {
    const auto& cand = out.ract[g.j_class_of[x]];
    const auto& rx = lg.r_classes[lg.r_class_of[x]];
    std::vector<bool> in_rx(t.order(), false);
    for (Elt y : rx) in_rx[y] = true;
    for (Elt a : cand) {
      if (t.mul(x, a) != x) continue;
      bool ok = true;
      for (Elt u = 0; u < n && ok; ++u)
        if (lg.r_strictly_below(t.mul(x, u), x) != lg.r_strictly_below(t.mul(a, u), a))
          ok = false;
      if (!ok) continue;
      // {x y : y in R_a} must be exactly R_x.
      std::set<Elt> image;
      for (Elt y : lg.r_classes[lg.r_class_of[a]]) {
        const Elt p = t.mul(x, y);
        if (!in_rx[p]) {
          ok = false;
          break;
        }
        image.insert(p);
      }
      if (!ok || image.size() != rx.size()) continue;
      out.witnesses[x].push_back(a);
    }
    if (out.witnesses[x].empty())
      throw InternalError("empty activator witness set for element " + std::to_string(x));
    if (std::none_of(out.witnesses[x].begin(), out.witnesses[x].end(),
                     [&](Elt a) { return t.mul(a, a) == a; }))
      throw InternalError("activator witness set without idempotent for element " +
                          std::to_string(x));
  }
  return out;
}

}  // namespace pointlike
