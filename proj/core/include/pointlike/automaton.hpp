#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pointlike/stable.hpp"

namespace pointlike {

// Permutation over state positions 0..m-1; images by position.
using Permutation = std::vector<unsigned>;

// Per stable R-class of C: the blocks of the class, one permutation of them
// per letter of S (the partial quotient action completed canonically), and
// the group those permutations generate.
struct LocalGroup {
  unsigned r_class = 0;
  std::vector<unsigned> states;            // block ids, ascending
  std::vector<Permutation> letter_perm;    // per letter of S
  std::vector<Permutation> elements;       // generated group, BFS order
  std::vector<std::vector<unsigned>> mult; // composition table on elements
  std::vector<unsigned> inverse;
  unsigned identity = 0;

  unsigned index_of(const Permutation& p) const;
};

std::vector<LocalGroup> build_local_groups(const Semigroup& s, const StableData& sd);

// The group generated by the per-letter tuples of local permutations, inside
// the direct product of the local groups.  Elements are tuples of local
// element indices, hash-consed in BFS order from the letter generators.
struct GlobalGroup {
  std::vector<LocalGroup> locals;
  std::vector<std::vector<unsigned>> elements;
  std::vector<unsigned> letter;   // per letter of S
  unsigned identity = 0;
  std::vector<unsigned> inverse;

  unsigned size() const { return static_cast<unsigned>(elements.size()); }
  unsigned compose(unsigned a, unsigned b) const;  // apply a, then b
  // Image of a block under a group element (block must lie in a stable
  // R-class).
  unsigned act_block(unsigned block, unsigned g) const;

 private:
  friend GlobalGroup build_global_group(const StableData&, std::vector<LocalGroup>,
                                        const Guards&);
  std::map<std::vector<unsigned>, unsigned> index_;
  std::vector<unsigned> local_of_block_;  // block id -> slot in locals, or npos
  std::vector<unsigned> pos_of_block_;    // block id -> position in states
};

GlobalGroup build_global_group(const StableData& sd, std::vector<LocalGroup> locals,
                               const Guards& guards = {});

// States of the flow automaton: init plus every (X, d, g) with X a fixed
// point and the block of X moved by d^-1 g still a stable block.  State 0 is
// init; state i >= 1 is described by noninit[i-1].
struct AutomatonState {
  Subset fixed_set;  // X
  unsigned d = 0, g = 0;
  bool operator==(const AutomatonState&) const = default;
};

struct FlowAutomaton {
  std::vector<AutomatonState> noninit;
  std::vector<std::vector<unsigned>> delta;  // [state][letter] -> state, row 0 = init
  std::vector<Subset> flow;                  // per non-init state

  std::size_t state_count() const { return noninit.size() + 1; }
  // State id for (X, d, g), or 0 if absent (0 is never a non-init id).
  unsigned find_state(Subset x, unsigned d, unsigned g) const;

  std::map<std::tuple<std::uint64_t, unsigned, unsigned>, unsigned> index;
};

// The state set is the full filtered triple product by default; pruning to
// the init-reachable part is an optimization that shrinks the transition
// semigroup without changing the cover complex, and must be asked for.
enum class StatePolicy { kFull, kReachableOnly };

FlowAutomaton build_automaton(const Semigroup& s, const StableData& sd,
                              const GlobalGroup& gg, const Guards& guards = {},
                              StatePolicy policy = StatePolicy::kFull);

// Both flow axioms at every (state, letter), plus delta never reaching init.
bool check_flow(const Semigroup& s, const FlowAutomaton& fa);

// Everything lying under some flow value, materialized as a complex.  The
// complex invariants are certified, not assumed.
Complex cover_complex(const Semigroup& s, const FlowAutomaton& fa,
                      const Guards& guards = {});

// The transformation semigroup on the state set generated by the letters,
// with distinct transformations identified (faithful).
struct TransitionSemigroup {
  Semigroup semigroup;
  std::vector<std::vector<unsigned>> transformation;  // per element
  std::vector<Elt> letter;                            // s -> element index
};

TransitionSemigroup transition_semigroup(const FlowAutomaton& fa,
                                         const Guards& guards = {});

// The subsemigroup of S x T generated by the letter pairs (s, s~).  Fibers
// are checked against the flow en route (InternalError on failure).
struct WitnessMorphism {
  std::vector<std::pair<Elt, Elt>> pairs;  // sorted

  std::vector<Elt> fiber(Elt t) const;  // {s : (s, t) in pairs}, ascending
  std::vector<Elt> image() const;       // second-coordinate image, ascending
};

WitnessMorphism witness_relational_morphism(const Semigroup& s, const FlowAutomaton& fa,
                                            const TransitionSemigroup& ts);

// Every fiber is contained in the flow value of init moved by its element.
bool check_witness_fibers(const FlowAutomaton& fa, const TransitionSemigroup& ts,
                          const WitnessMorphism& wm);

// Every member of the construct is contained in some fiber.
bool check_construct_covered_by_fibers(const ConstructResult& cr,
                                       const WitnessMorphism& wm);

// Documented JSON rendering of the automaton and witness morphism.
std::string automaton_to_json(const Semigroup& s, const StableData& sd,
                              const GlobalGroup& gg, const FlowAutomaton& fa,
                              const TransitionSemigroup& ts, const WitnessMorphism& wm);

}  // namespace pointlike
