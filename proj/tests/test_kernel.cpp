#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pointlike/catalog.hpp"
#include "pointlike/kernel.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace pointlike;

TEST_CASE("group kernel of the named instances") {
  CHECK(group_kernel(fixtures::left_zero2()) == std::vector<Elt>{0, 1});
  CHECK(group_kernel(fixtures::right_zero2()) == std::vector<Elt>{0, 1});
  CHECK(group_kernel(fixtures::c2()) == std::vector<Elt>{0});
  CHECK(group_kernel(fixtures::t2()) == std::vector<Elt>{0, 2, 3});
  CHECK(group_kernel(fixtures::b2()) == std::vector<Elt>{0, 3, 4});
}

TEST_CASE("a relational morphism to C2 independently excludes the swap") {
  // Pair t2 with C2 by sending the swap to g and everything else to e, then
  // close under products.  The swap never pairs with the group identity, so
  // no saturation could legitimately put it into the kernel.
  const auto t2 = fixtures::t2();
  const auto c2 = fixtures::c2();
  std::set<std::pair<Elt, Elt>> graph{{0, 0}, {1, 1}, {2, 0}, {3, 0}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto a : std::vector(graph.begin(), graph.end()))
      for (auto b : std::vector(graph.begin(), graph.end()))
        if (graph.insert({t2.mul(a.first, b.first), c2.mul(a.second, b.second)}).second)
          changed = true;
  }
  CHECK_FALSE(graph.count({1, 0}));  // (swap, e) is unreachable
  for (Elt x : group_kernel(t2)) CHECK(graph.count({x, 0}));
}

TEST_CASE("kernel contains the idempotents and saturation is a fixpoint") {
  for (const auto& entry : enumerate_catalog(3)) {
    const auto& s = entry.semigroup;
    const auto kernel = group_kernel(s);
    const std::set<Elt> in_kernel(kernel.begin(), kernel.end());
    for (Elt e : idempotents(s)) CHECK(in_kernel.count(e));
    for (Elt a : kernel)
      for (Elt b : kernel) CHECK(in_kernel.count(s.mul(a, b)));
    for (Elt x = 0; x < s.order(); ++x)
      for (Elt y = 0; y < s.order(); ++y) {
        if (s.mul(s.mul(x, y), x) != x) continue;
        for (Elt a : kernel) {
          CHECK(in_kernel.count(s.mul(s.mul(x, a), y)));
          CHECK(in_kernel.count(s.mul(s.mul(y, a), x)));
        }
      }
  }
}

TEST_CASE("type-II blocks of the named instances") {
  const auto c3 = fixtures::c3();
  CHECK(type2_partition(c3).blocks ==
        std::vector<std::vector<Elt>>{{0}, {1}, {2}});

  const auto t2 = fixtures::t2();
  CHECK(type2_partition(t2).blocks ==
        std::vector<std::vector<Elt>>{{0}, {1}, {2, 3}});

  // In a band, mutual translations inside an R-class come from the kernel,
  // so blocks are exactly the R-classes.
  for (const auto& band : {fixtures::left_zero2(), fixtures::right_zero2()}) {
    const GreenData g = green(band);
    const TypeIIData t = type2_partition(band, g);
    CHECK(t.blocks == g.r_classes);
  }
}

TEST_CASE("blocks refine R-classes over the catalog") {
  for (const auto& entry : enumerate_catalog(3)) {
    const auto& s = entry.semigroup;
    const GreenData g = green(s);
    const TypeIIData t2 = type2_partition(s, g);
    for (const auto& block : t2.blocks) {
      for (Elt x : block) CHECK(g.r_class_of[x] == g.r_class_of[block[0]]);
    }
    // kernel trace of an R-class: empty or one full block
    std::set<Elt> kernel(t2.kernel.begin(), t2.kernel.end());
    for (const auto& rcls : g.r_classes) {
      std::set<unsigned> blocks_hit;
      std::size_t members = 0;
      for (Elt x : rcls)
        if (kernel.count(x)) {
          blocks_hit.insert(t2.block_of[x]);
          ++members;
        }
      CHECK(blocks_hit.size() <= 1);
      if (!blocks_hit.empty()) CHECK(t2.blocks[*blocks_hit.begin()].size() == members);
    }
  }
}

TEST_CASE("quotient actions on the named instances") {
  const auto c3 = fixtures::c3();
  {
    const GreenData g = green(c3);
    const TypeIIData t2 = type2_partition(c3, g);
    const QuotientPts q = quotient_pts(c3, 0, g, t2);
    CHECK(q.states.size() == 3);
    for (auto& row : q.action)
      for (unsigned img : row) CHECK(img != QuotientPts::kUndefined);
  }
  {
    const auto t2sg = fixtures::t2();
    const GreenData g = green(t2sg);
    const TypeIIData t2 = type2_partition(t2sg, g);
    const QuotientPts q = quotient_pts(t2sg, g.r_class_of[2], g, t2);
    CHECK(q.states.size() == 1);
    for (Elt letter = 0; letter < t2sg.order(); ++letter)
      CHECK(q.action[0][letter] == 0);  // every letter fixes the single state
  }
  {
    const auto n2 = fixtures::n2();
    const GreenData g = green(n2);
    const TypeIIData t2 = type2_partition(n2, g);
    const QuotientPts q = quotient_pts(n2, g.r_class_of[0], g, t2);
    CHECK(q.states.size() == 1);
    CHECK(q.action[0][0] == QuotientPts::kUndefined);
    CHECK(q.action[0][1] == QuotientPts::kUndefined);
  }
}

TEST_CASE("kernel elements act as partial identities") {
  for (const auto& s : {fixtures::t2(), fixtures::c3(), fixtures::b2()}) {
    const GreenData g = green(s);
    CHECK(check_kernel_partial_identity(s, g, type2_partition(s, g)));
  }
}

TEST_CASE("activator witnesses translate blocks") {
  for (const auto& s : {fixtures::c3(), fixtures::t2(), fixtures::b2()}) {
    const GreenData g = green(s);
    const TypeIIData t2 = type2_partition(s, g);
    CHECK(check_activator_block_action(s, g, t2, activators(s, g)));
  }
}

TEST_CASE("ER membership via injective actions") {
  CHECK(is_in_er_via_injectivity(fixtures::b2()));
  CHECK_FALSE(is_in_er_via_injectivity(fixtures::t2()));
  CHECK(is_in_er_via_injectivity(fixtures::c2()));
  CHECK(is_in_er_via_injectivity(fixtures::c2c2()));
}

TEST_CASE("the type-II partition is the minimal injective congruence") {
  // Exhaustive over orders <= 4: every congruence on (R, S) with an
  // injective quotient contains the type-II partition.
  std::size_t qualifying = 0;
  for (const auto& entry : enumerate_catalog(4)) {
    const auto& s = entry.semigroup;
    const GreenData g = green(s);
    const TypeIIData t2 = type2_partition(s, g);
    for (unsigned rc = 0; rc < g.r_classes.size(); ++rc) {
      const auto& r = g.r_classes[rc];
      for (const auto& rgs : oracles::all_partitions(r.size())) {
        // class id per R-member under the candidate partition
        auto cls = [&](Elt x) {
          for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] == x) return rgs[i];
          return ~0u;
        };
        // congruence: related states stay related wherever both move
        bool congruence = true;
        for (std::size_t i = 0; i < r.size() && congruence; ++i)
          for (std::size_t j = 0; j < r.size() && congruence; ++j) {
            if (rgs[i] != rgs[j]) continue;
            for (Elt letter = 0; letter < s.order(); ++letter) {
              const Elt a = s.mul(r[i], letter), b = s.mul(r[j], letter);
              if (g.r_class_of[a] != rc || g.r_class_of[b] != rc) continue;
              if (cls(a) != cls(b)) {
                congruence = false;
                break;
              }
            }
          }
        if (!congruence) continue;
        // injective quotient: letters act by partial injections on classes
        bool injective = true;
        for (Elt letter = 0; letter < s.order() && injective; ++letter) {
          std::map<unsigned, unsigned> image;  // class -> class
          std::set<unsigned> hit;
          for (std::size_t i = 0; i < r.size(); ++i) {
            const Elt a = s.mul(r[i], letter);
            if (g.r_class_of[a] != rc) continue;
            auto [it, fresh] = image.emplace(rgs[i], cls(a));
            if (!fresh) continue;
            if (!hit.insert(cls(a)).second) {
              injective = false;
              break;
            }
          }
        }
        if (!injective) continue;
        ++qualifying;
        // an injective congruence contains the type-II partition
        for (std::size_t i = 0; i < r.size(); ++i)
          for (std::size_t j = 0; j < r.size(); ++j)
            if (t2.block_of[r[i]] == t2.block_of[r[j]]) CHECK(rgs[i] == rgs[j]);
      }
    }
  }
  CHECK(qualifying > 500);  // the sweep actually exercised real congruences
}

TEST_CASE("the kernel is preserved by random congruence quotients") {
  std::mt19937 rng(987654);
  const auto entries = enumerate_catalog(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& s = entries[rng() % entries.size()].semigroup;
    std::vector<std::pair<Elt, Elt>> pairs;
    const int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i)
      pairs.emplace_back(static_cast<Elt>(rng() % s.order()),
                         static_cast<Elt>(rng() % s.order()));
    const auto q = oracles::congruence_quotient(s, pairs);

    std::set<Elt> image;
    for (Elt x : group_kernel(s)) image.insert(q.image_of[x]);
    const auto quotient_kernel = group_kernel(q.semigroup);
    CHECK(std::vector<Elt>(image.begin(), image.end()) == quotient_kernel);
  }
}
