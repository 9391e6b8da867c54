#include "tourney/generators.hpp"

#include <stdexcept>

#include "tourney/comodules.hpp"

namespace tourney {

Tournament transitive_tournament(int n) {
  Tournament::Builder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.orient(i, j);
  return b.build();
}

Tournament tn_family(int n) {
  if (n < 6) throw PreconditionError("the family starts at order 6");
  Tournament::Builder b(n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) {
      if (j == i + 1) b.orient(j, i);  // consecutive arcs reversed
      else b.orient(i, j);
    }
  for (int j = 0; j < n - 1; ++j) b.orient(n - 1, j);
  return b.build();
}

Tournament fact2_family(int n) {
  if (n < 8 || n % 2 != 0)
    throw PreconditionError("this family needs an even order of at least 8");
  const int core = (n - 2) / 2;  // rotational core, blown up into twin pairs
  const int source = 0, sink = n - 1;
  auto pair_lo = [](int q) { return 1 + 2 * q; };

  Tournament::Builder b(n);
  for (int v = 1; v < n; ++v) b.orient(source, v);
  for (int v = 0; v < n - 1; ++v) b.orient(v, sink);

  auto core_beats = [core](int q, int r) {
    int d = ((r - q) % core + core) % core;
    if (2 * d == core) return q < r;  // diametral pairs of an even core
    return d <= (core - 1) / 2 && d >= 1;
  };
  for (int q = 0; q < core; ++q) {
    b.orient(pair_lo(q), pair_lo(q) + 1);
    for (int r = 0; r < core; ++r) {
      if (q == r) continue;
      for (int x : {pair_lo(q), pair_lo(q) + 1})
        for (int y : {pair_lo(r), pair_lo(r) + 1})
          if (core_beats(q, r)) b.orient(x, y);
    }
  }
  Tournament t = b.build();

  if (is_transitive(t) || comodular_index(t).size != n / 2 + 1)
    throw std::logic_error("extremal even-order construction failed its self-check");
  return t;
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Tournament random_tournament(int n, std::uint64_t seed) {
  Tournament::Builder b(n);
  std::uint64_t state = seed;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (splitmix64_next(state) & 1ULL) b.orient(i, j);
      else b.orient(j, i);
    }
  return b.build();
}

}  // namespace tourney
