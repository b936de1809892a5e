#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pointlike/automaton.hpp"

namespace pointlike {

// Preorder on (fixed point, group element) pairs plus a top point.  By
// default pairs compare by the R-order of their first components alone; the
// literal mode additionally requires equal second components.
struct PointerPreorder {
  std::vector<std::pair<Elt, unsigned>> carrier;  // (fixed point, group elt)
  unsigned top;                                   // index of the added maximum
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return carrier.size() + 1; }
  unsigned index_of(Elt x, unsigned d) const;
  bool strictly_below(unsigned a, unsigned b) const { return leq[a][b] && !leq[b][a]; }
};

PointerPreorder build_pointer_preorder(const StableData& sd, const GlobalGroup& gg,
                                       bool literal_second_component = false);

// The update map of letter s at group element g, extended to the full
// carrier: top falls to (closure{s}, g_s); pairs outside the state set are
// fixed; pairs inside follow the automaton's case split.
std::vector<unsigned> update_map(const Semigroup& s, const StableData& sd,
                                 const GlobalGroup& gg, const FlowAutomaton& fa,
                                 const PointerPreorder& p, Elt letter, unsigned g);

// A point moved neither to itself nor strictly down, and where.
struct UpdateViolation {
  Elt letter = 0;
  unsigned group_element = 0;
  unsigned point = 0;
};

// Every update map either fixes a point or moves it strictly down.  On
// failure the offending (letter, group element, point) triple is reported
// through `violation` when given.
bool check_lambda_decreasing(const Semigroup& s, const StableData& sd,
                             const GlobalGroup& gg, const FlowAutomaton& fa,
                             const PointerPreorder& p,
                             UpdateViolation* violation = nullptr);

// The transformation semigroup generated by a family of decreasing maps is
// R-trivial.  Throws std::invalid_argument if a map is not decreasing.
bool check_decreasing_maps_r_trivial(const PointerPreorder& p,
                                     const std::vector<std::vector<unsigned>>& maps,
                                     const Guards& guards = {});

bool check_transition_in_er(const Semigroup& transition);

// End-to-end certification of one semigroup.
struct VerificationReport {
  std::size_t order = 0;
  bool in_er = false;

  // property flags -- all always set
  bool flow_ok = false;
  bool lambda_decreasing_ok = false;
  bool transition_in_er = false;
  bool cover_equals_construct = false;
  bool points_agrees_direct = false;
  bool fibers_ok = false;
  bool lemma_kernel_blocks = false;
  bool lemma_activator_action = false;
  bool lemma_blowup = false;
  bool lemma_idempotent_blowup = false;
  bool lemma_stabilizer_facts = false;
  bool lemma_stability = false;

  // sizes
  std::size_t complex_size = 0;
  std::size_t fixed_point_count = 0;
  std::size_t group_size = 0;
  std::size_t state_count = 0;
  std::size_t transition_size = 0;

  std::vector<Subset> maximal_pointlikes;
  std::vector<std::string> maximal_rendered;

  // timings (milliseconds); excluded from canonical JSON
  double construct_ms = 0, stable_ms = 0, automaton_ms = 0, checks_ms = 0;

  std::string guard_breach;  // non-empty: a guard stopped the pipeline
  std::string error;         // non-empty: an internal invariant failed

  bool all_ok() const;
};

VerificationReport certify(const Semigroup& s, const Guards& guards = {});

// Canonical JSON: stable field names, no volatile values unless
// include_timings is set.  Byte-identical across runs on equal inputs.
std::string report_to_json(const VerificationReport& report, bool include_timings = false);

}  // namespace pointlike
