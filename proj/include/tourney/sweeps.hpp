#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tourney/core.hpp"
#include "tourney/enumerate.hpp"

namespace tourney {

// The invariant sweeps behind `verify`. Each one checks a family of
// tournaments against a statement of the reversal theory and reports every
// violation; an empty issue list means the sweep passed.
enum class Sweep {
  theorem3,  // arc index = ceil(co-modular index / 2) = exhaustive search
  theorem6,  // constructed transversal is exact, minimum, strictly bipartiting
  theorem8,  // co-modular index >= 3: every strict-transversal reversal is prime
  theorem9,  // subtournament index = co-modular index = exhaustive search
  koenig,    // transversal number = matching number, all tournaments
  tables,    // closed-form index tables
};

std::optional<Sweep> sweep_from_name(const std::string& name);
std::string sweep_name(Sweep s);
std::vector<Sweep> all_sweeps();

struct SweepIssue {
  int n = 0;
  std::string source;  // canonical code or generator expression
  std::string detail;
};

struct SweepReport {
  Sweep sweep = Sweep::theorem3;
  std::size_t checked = 0;
  std::vector<SweepIssue> issues;

  bool passed() const { return issues.empty(); }
};

struct SweepOptions {
  int n_max = 6;
  bool allow_order_9 = false;
  std::uint64_t random_seed = 0x7455ED5EEDULL;  // base seed for sampled batches
  std::function<void(int, std::size_t, std::size_t)> progress;
};

SweepReport run_sweep(Sweep sweep, const SweepOptions& opts);

// Decomposable, not transitive of even order: a random tournament with a
// randomly sized module planted over one vertex. Deterministic in the seed.
Tournament random_decomposable(int n, std::uint64_t seed);

}  // namespace tourney
