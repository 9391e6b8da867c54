#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

// Canonical form for isomorphism tests at small orders: the minimum, over
// all vertex relabelings, of the pair-orientation bit string. Pairs are
// ordered (0,1),(0,2),(1,2),(0,3),... so that placing one more vertex only
// appends bits; bit = 1 when the lower-numbered vertex beats the higher.
// Equal codes <=> isomorphic tournaments.
struct CanonicalCode {
  int order = 0;
  std::uint64_t bits = 0;  // pair t at position (num_pairs-1-t), MSB-first

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator<(const CanonicalCode& a, const CanonicalCode& b) {
    return a.order != b.order ? a.order < b.order : a.bits < b.bits;
  }

  std::string to_hex() const;
};

// Exact minimization by branch and bound over partial relabelings; capped at
// order 9 (36 pair bits).
CanonicalCode canonical_code(const Tournament& t);

// The tournament whose adjacency is spelled by the code; its own canonical
// code is the code itself.
Tournament tournament_from_code(const CanonicalCode& code);

struct EnumerationOptions {
  bool allow_order_9 = false;  // ~191k classes, minutes of work
  // Called per parent class processed at the final level: (order, done, total).
  std::function<void(int, std::size_t, std::size_t)> progress;
};

// One representative per isomorphism class of order n, in canonical form,
// sorted by code. Grown one vertex at a time, deduplicating extensions by
// canonical code. Default cap n <= 8; order 9 is opt-in.
std::vector<Tournament> all_tournaments(int n, const EnumerationOptions& opts = {});

struct TableMismatch {
  int n = 0;
  std::string code_hex;  // offending class, when one exists
  std::string detail;
};

struct TableRow {
  int n = 0;
  int max_comodular_index = 0;
  int max_arc_index = 0;
  int max_subtournament_index = 0;  // over classes that admit one
  std::size_t class_count = 0;
  std::vector<TableMismatch> mismatches;
};

// Recomputes the closed-form index tables over every class of orders
// 5..n_max and records any disagreement: the maxima must be
//   ceil((n+1)/2) for the co-modular index,
//   ceil((n+1)/4) for the arc index (checked per class against the
//     exhaustive oracle at n <= 6),
//   ceil((n+1)/2) for the subtournament index except 3 at n = 6.
// Mismatches are data, not errors.
std::vector<TableRow> verify_tables(int n_max, const EnumerationOptions& opts = {});

}  // namespace tourney
