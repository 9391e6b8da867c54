// Brute-force reference implementations used to check the library. These
// deliberately enumerate subsets instead of reusing the decomposition-tree or
// co-module machinery, so they stay independent of the code under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tourney/core.hpp"
#include "tourney/generators.hpp"
#include "tourney/modules.hpp"

namespace oracles {

using tourney::Tournament;
using tourney::VertexSet;

inline VertexSet from_mask(int n, std::uint32_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (mask & (1u << v)) s.insert(v);
  return s;
}

// Direct definition check, no closures: every outside vertex uniform.
inline bool is_module_direct(const Tournament& t, const VertexSet& m) {
  for (int v = 0; v < t.order(); ++v) {
    if (m.contains(v)) continue;
    int seen = -1;
    for (int u : m.elements()) {
      int bit = t.beats(v, u) ? 1 : 0;
      if (seen < 0) seen = bit;
      else if (seen != bit) return false;
    }
  }
  return true;
}

// All nontrivial modules by subset enumeration (n <= 20 or so).
inline std::vector<VertexSet> modules_brute(const Tournament& t) {
  const int n = t.order();
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size < 2 || size > n - 1) continue;
    VertexSet m = from_mask(n, mask);
    if (is_module_direct(t, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
  return out;
}

inline bool indecomposable_brute(const Tournament& t) { return modules_brute(t).empty(); }

// Minimal co-modules by definition: subsets M where M or its complement is a
// nontrivial module, filtered down to the inclusion-minimal ones.
inline std::vector<VertexSet> minimal_comodules_brute(const Tournament& t) {
  const int n = t.order();
  std::vector<VertexSet> mods = modules_brute(t);
  auto in_mods = [&](const VertexSet& s) {
    return std::find(mods.begin(), mods.end(), s) != mods.end();
  };
  std::vector<VertexSet> comodules;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet m = from_mask(n, mask);
    if (in_mods(m) || in_mods(m.complement())) comodules.push_back(m);
  }
  std::vector<VertexSet> out;
  for (const VertexSet& c : comodules) {
    bool minimal = true;
    for (const VertexSet& o : comodules)
      if (o != c && o.is_subset_of(c)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
  return out;
}

// Maximum matching (pairwise disjoint subfamily) by exhaustive subsets.
inline int matching_number_brute(const std::vector<VertexSet>& family, int n) {
  const int k = static_cast<int>(family.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    VertexSet used(n);
    bool ok = true;
    int size = 0;
    for (int i = 0; i < k && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      if (family[i].intersects(used)) ok = false;
      else {
        used |= family[i];
        ++size;
      }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Minimum transversal size by vertex-subset enumeration.
inline int transversal_number_brute(const std::vector<VertexSet>& family, int n) {
  if (family.empty()) return 0;
  int best = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet r = from_mask(n, mask);
    bool hits_all = true;
    for (const VertexSet& f : family)
      if (!f.intersects(r)) {
        hits_all = false;
        break;
      }
    if (hits_all) best = std::min(best, r.count());
  }
  return best;
}

// Strict transversals straight from the definitions: exact and minimum
// transversals of the minimal co-modules that properly overlap every
// nontrivial module.
inline std::vector<VertexSet> strict_transversals_brute(const Tournament& t) {
  const int n = t.order();
  std::vector<VertexSet> mc = minimal_comodules_brute(t);
  std::vector<VertexSet> mods = modules_brute(t);
  int tau = transversal_number_brute(mc, n);
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet r = from_mask(n, mask);
    if (r.count() != tau) continue;
    bool ok = true;
    for (const VertexSet& f : mc)
      if ((f & r).count() != 1) {
        ok = false;
        break;
      }
    for (const VertexSet& m : mods)
      if (ok && !r.overlaps(m)) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

inline Tournament apply_relabeling(const Tournament& t, const std::vector<int>& perm) {
  Tournament::Builder b(t.order());
  for (int x = 0; x < t.order(); ++x)
    for (int y = x + 1; y < t.order(); ++y)
      t.beats(x, y) ? b.orient(perm[x], perm[y]) : b.orient(perm[y], perm[x]);
  return b.build();
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t state = seed;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(tourney::splitmix64_next(state) % (i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

inline std::size_t automorphism_count(const Tournament& t) {
  const int n = t.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = x + 1; y < n && ok; ++y)
        if (t.beats(x, y) != t.beats(perm[x], perm[y])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Transitivity by the triple definition, as a second route beside the
// score-sequence test.
inline bool is_transitive_triples(const Tournament& t) {
  const int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (t.beats(x, y) && t.beats(y, z) && !t.beats(x, z)) return false;
      }
  return true;
}

}  // namespace oracles
