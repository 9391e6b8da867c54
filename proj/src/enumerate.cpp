#include "tourney/enumerate.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "tourney/comodules.hpp"
#include "tourney/indices.hpp"
#include "tourney/modules.hpp"

namespace tourney {

namespace {

constexpr int kCodeOrderCap = 9;

int pair_count(int n) { return n * (n - 1) / 2; }

// Branch-and-bound minimization of the pair bit string. Positions are filled
// left to right; placing position k appends the k bits (0,k),(1,k),...,
// (k-1,k), so prefixes are comparable against the incumbent.
struct CodeSearch {
  int n = 0;  // at most kCodeOrderCap
  std::array<std::uint16_t, 2 * kCodeOrderCap> row{};  // row[v] = out-neighbors of v
  int total_bits = 0;
  std::uint64_t best = 0;

  void run(int depth, int bits_done, std::uint64_t prefix, std::uint32_t used,
           std::array<int, 2 * kCodeOrderCap>& perm) {
    if (depth == n) {
      if (prefix < best) best = prefix;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      std::uint64_t chunk = 0;
      for (int i = 0; i < depth; ++i) chunk = (chunk << 1) | ((row[perm[i]] >> v) & 1u);
      std::uint64_t next_prefix = (prefix << depth) | chunk;
      int next_bits = bits_done + depth;
      if (next_prefix > (best >> (total_bits - next_bits))) continue;
      perm[depth] = v;
      run(depth + 1, next_bits, next_prefix, used | (1u << v), perm);
    }
  }
};

}  // namespace

std::string CanonicalCode::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out = "n" + std::to_string(order) + ":";
  int nibbles = (pair_count(order) + 3) / 4;
  if (nibbles == 0) nibbles = 1;
  for (int i = nibbles - 1; i >= 0; --i) out += digits[(bits >> (4 * i)) & 0xF];
  return out;
}

CanonicalCode canonical_code(const Tournament& t) {
  const int n = t.order();
  if (n > kCodeOrderCap)
    throw CapError("canonical code capped at order " + std::to_string(kCodeOrderCap));
  CanonicalCode code;
  code.order = n;
  if (n < 2) return code;

  CodeSearch search;
  search.n = n;
  search.total_bits = pair_count(n);
  for (int v = 0; v < n; ++v) {
    std::uint16_t r = 0;
    for (int u = 0; u < n; ++u)
      if (u != v && t.beats(v, u)) r |= static_cast<std::uint16_t>(1u << u);
    search.row[v] = r;
  }

  // Identity labeling as the incumbent.
  std::uint64_t identity = 0;
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < k; ++i) identity = (identity << 1) | (t.beats(i, k) ? 1u : 0u);
  search.best = identity;

  std::array<int, 2 * kCodeOrderCap> perm{};
  search.run(0, 0, 0, 0, perm);
  code.bits = search.best;
  return code;
}

Tournament tournament_from_code(const CanonicalCode& code) {
  const int n = code.order;
  Tournament::Builder b(n);
  int pos = pair_count(n);
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < k; ++i) {
      --pos;
      if ((code.bits >> pos) & 1ULL) b.orient(i, k);
      else b.orient(k, i);
    }
  return b.build();
}

std::vector<Tournament> all_tournaments(int n, const EnumerationOptions& opts) {
  if (n < 1) throw PreconditionError("enumeration needs order >= 1");
  if (n > 9 || (n == 9 && !opts.allow_order_9))
    throw CapError("enumeration capped at order 8 (order 9 is opt-in)");

  std::vector<std::uint64_t> codes{0};  // the single class of order 1
  for (int m = 2; m <= n; ++m) {
    std::vector<std::uint64_t> parents = std::move(codes);
    std::unordered_set<std::uint64_t> seen;
    const std::uint32_t patterns = 1u << (m - 1);
    for (std::size_t p = 0; p < parents.size(); ++p) {
      Tournament parent = tournament_from_code(CanonicalCode{m - 1, parents[p]});
      for (std::uint32_t pattern = 0; pattern < patterns; ++pattern) {
        Tournament::Builder b(m);
        for (int i = 0; i < m - 1; ++i) {
          for (int j = i + 1; j < m - 1; ++j)
            parent.beats(i, j) ? b.orient(i, j) : b.orient(j, i);
          if (pattern & (1u << i)) b.orient(m - 1, i);
          else b.orient(i, m - 1);
        }
        seen.insert(canonical_code(b.build()).bits);
      }
      if (m == n && opts.progress) opts.progress(n, p + 1, parents.size());
    }
    codes.assign(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
  }

  std::vector<Tournament> out;
  out.reserve(codes.size());
  for (std::uint64_t bits : codes) out.push_back(tournament_from_code(CanonicalCode{n, bits}));
  return out;
}

std::vector<TableRow> verify_tables(int n_max, const EnumerationOptions& opts) {
  if (n_max < 5) throw PreconditionError("index tables start at order 5");
  if (n_max > 9 || (n_max == 9 && !opts.allow_order_9))
    throw CapError("table verification capped at order 8 (order 9 is opt-in)");

  std::vector<TableRow> rows;
  for (int n = 5; n <= n_max; ++n) {
    TableRow row;
    row.n = n;
    std::vector<Tournament> classes = all_tournaments(n, opts);
    row.class_count = classes.size();

    for (const Tournament& t : classes) {
      const std::string hex = canonical_code(t).to_hex();
      int cdx = comodular_index(t).size;
      row.max_comodular_index = std::max(row.max_comodular_index, cdx);

      int arc = arc_index(t).value;
      row.max_arc_index = std::max(row.max_arc_index, arc);
      if (n <= 6) {
        std::optional<int> oracle = brute_arc_index(t);
        if (!oracle.has_value() || *oracle != arc)
          row.mismatches.push_back(
              {n, hex, "arc index " + std::to_string(arc) + " but exhaustive search found " +
                           (oracle ? std::to_string(*oracle) : std::string("none"))});
      }

      if (!is_transitive_of_even_order(t)) {
        IndexReport rep = subtournament_index(t);
        if (!rep.subtournament_index.has_value()) {
          row.mismatches.push_back({n, hex, "no reversal set found for an eligible tournament"});
          continue;
        }
        if (*rep.subtournament_index != cdx)
          row.mismatches.push_back(
              {n, hex, "subtournament index " + std::to_string(*rep.subtournament_index) +
                           " differs from co-modular index " + std::to_string(cdx)});
        row.max_subtournament_index = std::max(row.max_subtournament_index,
                                               *rep.subtournament_index);
      }
    }

    const int expect_cdx = (n + 2) / 2;          // ceil((n+1)/2)
    const int expect_arc = (n + 4) / 4;          // ceil((n+1)/4)
    const int expect_sub = n == 6 ? 3 : expect_cdx;
    if (row.max_comodular_index != expect_cdx)
      row.mismatches.push_back({n, "", "max co-modular index " +
                                           std::to_string(row.max_comodular_index) +
                                           ", closed form says " + std::to_string(expect_cdx)});
    if (row.max_arc_index != expect_arc)
      row.mismatches.push_back({n, "", "max arc index " + std::to_string(row.max_arc_index) +
                                           ", closed form says " + std::to_string(expect_arc)});
    if (row.max_subtournament_index != expect_sub)
      row.mismatches.push_back({n, "", "max subtournament index " +
                                           std::to_string(row.max_subtournament_index) +
                                           ", closed form says " + std::to_string(expect_sub)});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tourney
