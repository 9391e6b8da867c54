#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tourney/core.hpp"
#include "tourney/transversal.hpp"

namespace tourney {

enum class IndexMethod {
  indecomposable_input,  // nothing to do, empty witness
  construction,          // built transversal, reversal proven indecomposable
  pair_search,           // co-modular index 2: searched 2-subsets
  brute_force,
};

// The three decomposability measures of one tournament, with witnesses.
struct IndexReport {
  // Smallest vertex set whose internal reversal is indecomposable; nullopt
  // when no such set exists (transitive of even order).
  std::optional<int> subtournament_index;
  // Fewest arc reversals to reach an indecomposable tournament.
  int arc_index = 0;
  int comodular_index = 0;
  VertexSet witness_vertices;    // reversal set X achieving subtournament_index
  VertexSet witness_transversal; // strict transversal backing the construction
  IndexMethod method = IndexMethod::indecomposable_input;
};

// Subtournament-reversal index for order >= 5. Transitive even order yields
// the "no such set" result rather than an error; orders below 5 are refused
// (use brute_subtournament_index there).
IndexReport subtournament_index(const Tournament& t);

struct ArcIndexResult {
  int value = 0;
  // Arc set of that size whose reversal is indecomposable; nullopt when the
  // witness was not requested or the search budget ran out.
  std::optional<std::vector<Arc>> witness;
};

// Arc-reversal index for order >= 5: always half the co-modular index,
// rounded up. The optional witness is found by exhaustive search; budget is
// the number of candidate arc sets examined before giving up.
ArcIndexResult arc_index(const Tournament& t, bool want_witness = false,
                         std::uint64_t budget = 2'000'000);

struct BruteForceIndex {
  std::optional<int> value;  // nullopt: no subset works
  VertexSet witness;         // empty when value is nullopt
};

// Exhaustive subtournament-reversal index: scans vertex subsets in size
// order. Intended as the independent check at small orders (cap on n).
BruteForceIndex brute_subtournament_index(const Tournament& t, int order_cap = 12);

// Exhaustive arc-reversal index, scanning arc subsets in size order; nullopt
// when no arc set works (decomposable tournaments of order 3 or 4).
std::optional<int> brute_arc_index(const Tournament& t, int order_cap = 7);

struct StrictReversalSweep {
  bool all_indecomposable = true;
  std::optional<VertexSet> counterexample;
};

// For co-modular index >= 3: reverses every strict transversal and checks
// each result is indecomposable. A counterexample would be a library bug.
StrictReversalSweep check_all_strict_reversals(const Tournament& t,
                                               std::uint64_t subset_cap = 10'000'000);

// True iff some strict transversal has a decomposable reversal. Such
// tournaments always have co-modular index 2.
bool has_decomposable_strict_reversal(const Tournament& t,
                                      std::uint64_t subset_cap = 10'000'000);

}  // namespace tourney
