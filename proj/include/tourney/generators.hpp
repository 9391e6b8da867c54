#pragma once

#include <cstdint>

#include "tourney/core.hpp"

namespace tourney {

// The transitive tournament on 0..n-1: i beats j exactly when i < j.
Tournament transitive_tournament(int n);

// The two-level family used throughout the verification sweeps (n >= 6):
// on 0..n-2, the transitive order with every consecutive arc reversed (an
// indecomposable tournament), plus vertex n-1 beating all others. Its unique
// nontrivial module is {0..n-2}.
Tournament tn_family(int n);

// A non-transitive tournament of even order n >= 8 whose co-modular index is
// the maximum n/2+1: a source, a sink, and between them a twin-pair blow-up
// of a rotational core. The construction checks its own postcondition and
// refuses to return anything weaker.
Tournament fact2_family(int n);

// Seeded uniform tournament. Stream contract, fixed so that ports agree:
// a splitmix64 generator seeded with `seed`, one draw per unordered pair in
// row-major order ((0,1),(0,2),...,(1,2),...), arc i->j iff the draw is odd.
Tournament random_tournament(int n, std::uint64_t seed);

// The splitmix64 step itself (advances state, returns the mixed output).
std::uint64_t splitmix64_next(std::uint64_t& state);

}  // namespace tourney
