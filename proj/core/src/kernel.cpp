#include "pointlike/kernel.hpp"

#include <algorithm>
#include <set>

#include "pointlike/guards.hpp"

namespace pointlike {

std::vector<Elt> group_kernel(const Semigroup& s) {
  const auto n = s.order();
  std::vector<bool> in(n, false);
  std::vector<Elt> work;
  auto add = [&](Elt x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  for (Elt e : idempotents(s)) add(e);

  // Pairs with xyx = x are fixed by the input; cache them once.
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (s.mul(s.mul(x, y), x) == x) pairs.emplace_back(x, y);

  // Worklist saturation under products and weak conjugation.
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Elt t = work[i];
    for (const auto& [x, y] : pairs) {
      add(s.mul(s.mul(x, t), y));
      add(s.mul(s.mul(y, t), x));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      add(s.mul(t, work[j]));
      add(s.mul(work[j], t));
    }
  }
  std::vector<Elt> out;
  for (Elt x = 0; x < n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

TypeIIData type2_partition(const Semigroup& s, const GreenData& g) {
  const auto n = s.order();
  TypeIIData t2;
  t2.kernel = group_kernel(s);

  // reach[x] contains y iff xa = y for some kernel element a, or y = x.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Elt x = 0; x < n; ++x) {
    reach[x][x] = true;
    for (Elt a : t2.kernel) reach[x][s.mul(x, a)] = true;
  }

  t2.block_of.assign(n, 0);
  std::vector<bool> assigned(n, false);
  for (Elt x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    const auto id = static_cast<unsigned>(t2.blocks.size());
    std::vector<Elt> block;
    for (Elt y = x; y < n; ++y)
      if (reach[x][y] && reach[y][x]) {
        block.push_back(y);
        t2.block_of[y] = id;
        assigned[y] = true;
      }
    t2.blocks.push_back(std::move(block));
  }

  // Blocks refine R (mutual translation is mutual R-order), and the kernel
  // meets an R-class in at most one block; both are structural facts.
  t2.blocks_of_r_class.resize(g.r_classes.size());
  for (unsigned b = 0; b < t2.blocks.size(); ++b) {
    const unsigned rc = g.r_class_of[t2.blocks[b][0]];
    for (Elt y : t2.blocks[b])
      if (g.r_class_of[y] != rc)
        throw InternalError("type-II block crosses R-classes");
    t2.blocks_of_r_class[rc].push_back(b);
  }
  std::vector<bool> in_kernel(n, false);
  for (Elt a : t2.kernel) in_kernel[a] = true;
  for (const auto& rcls : g.r_classes) {
    std::set<unsigned> kernel_blocks;
    std::vector<Elt> kernel_members;
    for (Elt x : rcls)
      if (in_kernel[x]) {
        kernel_blocks.insert(t2.block_of[x]);
        kernel_members.push_back(x);
      }
    if (kernel_blocks.size() > 1)
      throw InternalError("kernel meets an R-class in more than one block");
    if (kernel_blocks.size() == 1 &&
        t2.blocks[*kernel_blocks.begin()].size() != kernel_members.size())
      throw InternalError("kernel trace of an R-class is not a full block");
  }
  return t2;
}

TypeIIData type2_partition(const Semigroup& s) { return type2_partition(s, green(s)); }

unsigned QuotientPts::pos_of_block(unsigned block) const {
  auto it = std::lower_bound(states.begin(), states.end(), block);
  if (it == states.end() || *it != block)
    throw std::out_of_range("block is not a state of this quotient");
  return static_cast<unsigned>(it - states.begin());
}

QuotientPts quotient_pts(const Semigroup& s, unsigned r_class, const GreenData& g,
                         const TypeIIData& t2) {
  if (r_class >= g.r_classes.size()) throw std::out_of_range("bad R-class id");
  QuotientPts q;
  q.states = t2.blocks_of_r_class[r_class];
  std::sort(q.states.begin(), q.states.end());

  q.action.assign(q.states.size(), std::vector<unsigned>(s.order(), QuotientPts::kUndefined));
  for (std::size_t pos = 0; pos < q.states.size(); ++pos) {
    for (Elt letter = 0; letter < s.order(); ++letter) {
      unsigned image = QuotientPts::kUndefined;
      for (Elt x : t2.blocks[q.states[pos]]) {
        const Elt p = s.mul(x, letter);
        if (g.r_class_of[p] != r_class) continue;  // fell out of the class
        const unsigned img_pos = q.pos_of_block(t2.block_of[p]);
        if (image == QuotientPts::kUndefined)
          image = img_pos;
        else if (image != img_pos)
          throw InternalError("type-II congruence violated on a quotient action");
      }
      q.action[pos][letter] = image;
    }
  }
  // Minimal injective congruence: each letter acts by a partial injection.
  for (Elt letter = 0; letter < s.order(); ++letter) {
    std::set<unsigned> hit;
    for (std::size_t pos = 0; pos < q.states.size(); ++pos) {
      const unsigned img = q.action[pos][letter];
      if (img == QuotientPts::kUndefined) continue;
      if (!hit.insert(img).second)
        throw InternalError("quotient action is not injective");
    }
  }
  return q;
}

bool check_kernel_partial_identity(const Semigroup& s, const GreenData& g,
                                   const TypeIIData& t2) {
  for (unsigned rc = 0; rc < g.r_classes.size(); ++rc) {
    const QuotientPts q = quotient_pts(s, rc, g, t2);
    for (Elt a : t2.kernel)
      for (std::size_t pos = 0; pos < q.states.size(); ++pos) {
        const unsigned img = q.action[pos][a];
        if (img != QuotientPts::kUndefined && img != pos) return false;
      }
  }
  return true;
}

bool check_activator_block_action(const Semigroup& s, const GreenData& g,
                                  const TypeIIData& t2, const ActivatorData& act) {
  const auto n = s.order();
  const Elt identity = act.identity();
  const auto& lg = act.lifted_green;

  auto block_set = [&](Elt x) {
    return std::set<Elt>(t2.blocks[t2.block_of[x]].begin(),
                         t2.blocks[t2.block_of[x]].end());
  };

  std::vector<QuotientPts> quotients;
  for (unsigned rc = 0; rc < g.r_classes.size(); ++rc)
    quotients.push_back(quotient_pts(s, rc, g, t2));

  for (Elt x = 0; x < n; ++x) {
    for (Elt t : act.witnesses[x]) {
      // x translated over the block of t gives exactly the block of x.  The
      // adjoined identity forms its own block.
      std::set<Elt> image;
      if (t == identity) {
        image.insert(x);
      } else {
        for (Elt u : t2.blocks[t2.block_of[t]]) image.insert(s.mul(x, u));
      }
      if (image != block_set(x)) return false;

      // R-class of t in the lifted semigroup; its S-members carry the
      // translation property and the quotient morphism.
      const auto& rt = lg.r_classes[lg.r_class_of[t]];
      for (Elt v : rt) {
        if (v >= n) continue;
        std::set<Elt> lhs;
        for (Elt u : t2.blocks[t2.block_of[v]]) lhs.insert(s.mul(x, u));
        if (lhs != block_set(s.mul(x, v))) return false;
      }

      // Induced block map [v] -> [xv] from R_t to R_x: well-defined,
      // surjective, and commuting with every letter where defined.
      if (t == identity) {
        // R_t = {I}; the map sends [I] to [x], so the quotient of R_x must
        // be a single block.
        if (t2.blocks_of_r_class[g.r_class_of[x]].size() != 1) return false;
        continue;
      }
      const unsigned rc_t = g.r_class_of[t];
      const unsigned rc_x = g.r_class_of[x];
      const auto& qt = quotients[rc_t];
      const auto& qx = quotients[rc_x];
      std::vector<unsigned> zeta(qt.states.size());
      std::set<unsigned> hit;
      for (std::size_t pos = 0; pos < qt.states.size(); ++pos) {
        const Elt rep = t2.blocks[qt.states[pos]][0];
        const Elt mapped = s.mul(x, rep);
        if (g.r_class_of[mapped] != rc_x) return false;
        zeta[pos] = qx.pos_of_block(t2.block_of[mapped]);
        hit.insert(zeta[pos]);
        for (Elt rep2 : t2.blocks[qt.states[pos]])
          if (t2.block_of[s.mul(x, rep2)] != qx.states[zeta[pos]]) return false;
      }
      if (hit.size() != qx.states.size()) return false;
      for (std::size_t pos = 0; pos < qt.states.size(); ++pos)
        for (Elt letter = 0; letter < n; ++letter) {
          const unsigned moved = qt.action[pos][letter];
          if (moved == QuotientPts::kUndefined) continue;
          if (qx.action[zeta[pos]][letter] != zeta[moved]) return false;
        }
    }
  }
  return true;
}

bool is_in_er_via_injectivity(const Semigroup& s) {
  const GreenData g = green(s);
  for (const auto& rcls : g.r_classes) {
    const unsigned rc = g.r_class_of[rcls[0]];
    for (Elt letter = 0; letter < s.order(); ++letter) {
      std::set<Elt> hit;
      for (Elt x : rcls) {
        const Elt p = s.mul(x, letter);
        if (g.r_class_of[p] != rc) continue;
        if (!hit.insert(p).second) return false;
      }
    }
  }
  return true;
}

}  // namespace pointlike
