#pragma once

#include <cstdint>
#include <vector>

#include "tourney/comodules.hpp"
#include "tourney/core.hpp"
#include "tourney/modules.hpp"

namespace tourney {

// The alternating slice of a transitive component used by the transversal
// construction. With the component ordered v_0 (dominant) .. v_{m-1}:
//   - even positions when {v_0} is a minimal co-module,
//   - positions m-1, m-3, ... when {v_{m-1}} is one,
//   - odd positions otherwise.
// When both endpoint singletons qualify, the tournament is transitive and the
// two branches agree on odd orders; even order is rejected.
VertexSet component_transversal(const Tournament& t, const TransitiveComponent& C);

// Exact minimum transversal of the minimal co-modules that strictly
// bipartitions the nontrivial modules: one deterministic representative
// (smallest vertex) of every non-twin minimal co-module, united with the
// alternating slices of all transitive components of size >= 2.
//
// Requires a decomposable input that is not transitive of even order.
VertexSet build_transversal(const Tournament& t);

// Verdicts for a candidate set R against the minimal co-modules and the
// nontrivial modules.
struct TransversalReport {
  VertexSet set;
  bool is_transversal = false;      // meets every minimal co-module
  bool is_exact = false;            // meets each in exactly one vertex
  bool is_minimum = false;          // |R| equals the transversal number
  bool strictly_bipartite = false;  // properly overlaps every nontrivial module
  // Conjunction of the four predicates: R is one of the strict transversals
  // the reversal theory is built on.
  bool is_strict = false;
};

TransversalReport classify_transversal(const Tournament& t, const VertexSet& R);

// All strict transversals, by filtering the subsets of the family support
// whose size is the co-modular index (no others qualify) through
// classify_transversal. Sorted deterministically. Throws CapError when the
// binomial search would exceed subset_cap.
std::vector<VertexSet> enumerate_strict_transversals(const Tournament& t,
                                                     std::uint64_t subset_cap = 10'000'000);

}  // namespace tourney
