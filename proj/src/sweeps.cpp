#include "tourney/sweeps.hpp"

#include <algorithm>

#include "tourney/comodules.hpp"
#include "tourney/generators.hpp"
#include "tourney/indices.hpp"
#include "tourney/modules.hpp"
#include "tourney/transversal.hpp"

namespace tourney {

std::optional<Sweep> sweep_from_name(const std::string& name) {
  for (Sweep s : all_sweeps())
    if (sweep_name(s) == name) return s;
  return std::nullopt;
}

std::string sweep_name(Sweep s) {
  switch (s) {
    case Sweep::theorem3: return "theorem3";
    case Sweep::theorem6: return "theorem6";
    case Sweep::theorem8: return "theorem8";
    case Sweep::theorem9: return "theorem9";
    case Sweep::koenig: return "koenig";
    case Sweep::tables: return "tables";
  }
  return "?";
}

std::vector<Sweep> all_sweeps() {
  return {Sweep::theorem3, Sweep::theorem6, Sweep::theorem8,
          Sweep::theorem9, Sweep::koenig,   Sweep::tables};
}

Tournament random_decomposable(int n, std::uint64_t seed) {
  if (n < 4) throw PreconditionError("planted decomposable tournaments need order >= 4");
  std::uint64_t state = seed;
  const int base_order = 2 + static_cast<int>(splitmix64_next(state) % (n - 2));  // 2..n-1
  const int inner_order = n - base_order + 1;
  const int slot = static_cast<int>(splitmix64_next(state) % base_order);
  Tournament base = random_tournament(base_order, splitmix64_next(state));
  Tournament inner = random_tournament(inner_order, splitmix64_next(state));

  // Base vertex `slot` blown up into `inner`; inner occupies slot..slot+inner_order-1.
  auto label = [&](int base_vertex) {
    return base_vertex < slot ? base_vertex : base_vertex + inner_order - 1;
  };
  Tournament::Builder b(n);
  for (int i = 0; i < base_order; ++i)
    for (int j = i + 1; j < base_order; ++j) {
      if (i == slot || j == slot) continue;
      base.beats(i, j) ? b.orient(label(i), label(j)) : b.orient(label(j), label(i));
    }
  for (int i = 0; i < base_order; ++i) {
    if (i == slot) continue;
    for (int k = 0; k < inner_order; ++k) {
      if (base.beats(i, slot)) b.orient(label(i), slot + k);
      else b.orient(slot + k, label(i));
    }
  }
  for (int k = 0; k < inner_order; ++k)
    for (int l = k + 1; l < inner_order; ++l)
      inner.beats(k, l) ? b.orient(slot + k, slot + l) : b.orient(slot + l, slot + k);
  return b.build();
}

namespace {

struct Corpus {
  std::vector<std::pair<Tournament, std::string>> items;

  void add(Tournament t, std::string source) {
    items.emplace_back(std::move(t), std::move(source));
  }
};

void add_classes(Corpus& corpus, int n, const SweepOptions& opts) {
  EnumerationOptions eo;
  eo.allow_order_9 = opts.allow_order_9;
  if (opts.progress) {
    eo.progress = [&opts](int order, std::size_t done, std::size_t total) {
      opts.progress(order, done, total);
    };
  }
  for (Tournament& t : all_tournaments(n, eo)) {
    std::string hex = canonical_code(t).to_hex();
    corpus.add(std::move(t), std::move(hex));
  }
}

// count planted decomposable tournaments with orders in [lo, hi], skipping
// transitive draws so that every item is in the constructive theory's domain.
void add_planted(Corpus& corpus, int count, int lo, int hi, std::uint64_t base_seed) {
  std::uint64_t state = base_seed;
  int used = 0;
  while (used < count) {
    std::uint64_t seed = splitmix64_next(state);
    int n = lo + static_cast<int>(seed % (hi - lo + 1));
    Tournament t = random_decomposable(n, seed);
    if (is_transitive(t)) continue;
    corpus.add(std::move(t),
               "planted(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")");
    ++used;
  }
}

void add_random(Corpus& corpus, int count, int lo, int hi, std::uint64_t base_seed) {
  std::uint64_t state = base_seed;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = splitmix64_next(state);
    int n = lo + static_cast<int>(seed % (hi - lo + 1));
    corpus.add(random_tournament(n, seed),
               "random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")");
  }
}

SweepReport sweep_theorem3(const SweepOptions& opts) {
  SweepReport report{Sweep::theorem3, 0, {}};
  Corpus corpus;
  for (int n = 5; n <= std::min(opts.n_max, 6); ++n) add_classes(corpus, n, opts);
  if (opts.n_max >= 7) {
    add_random(corpus, 60, 7, 7, opts.random_seed ^ 0x33);
    add_planted(corpus, 60, 7, 7, opts.random_seed ^ 0x34);
  }
  for (const auto& [t, source] : corpus.items) {
    ++report.checked;
    const int formula = (comodular_index(t).size + 1) / 2;
    ArcIndexResult res = arc_index(t, /*want_witness=*/true);
    std::optional<int> oracle = brute_arc_index(t);
    if (res.value != formula || !oracle.has_value() || res.value != *oracle) {
      report.issues.push_back({t.order(), source,
                               "arc index: formula " + std::to_string(formula) + ", reported " +
                                   std::to_string(res.value) + ", exhaustive " +
                                   (oracle ? std::to_string(*oracle) : std::string("none"))});
      continue;
    }
    if (!res.witness.has_value())
      report.issues.push_back({t.order(), source, "arc index witness search gave up"});
    else if (static_cast<int>(res.witness->size()) != res.value ||
             !is_indecomposable(invert_arcs(t, *res.witness)))
      report.issues.push_back({t.order(), source, "arc index witness does not check out"});
  }
  return report;
}

bool eligible_for_construction(const Tournament& t) {
  return !is_indecomposable(t) && !is_transitive_of_even_order(t);
}

SweepReport sweep_theorem6(const SweepOptions& opts) {
  SweepReport report{Sweep::theorem6, 0, {}};
  Corpus corpus;
  for (int n = 3; n <= opts.n_max; ++n) add_classes(corpus, n, opts);
  if (opts.n_max >= 7) add_planted(corpus, 500, 5, 12, opts.random_seed ^ 0x66);
  for (const auto& [t, source] : corpus.items) {
    if (!eligible_for_construction(t)) continue;
    ++report.checked;
    VertexSet r = build_transversal(t);
    TransversalReport verdict = classify_transversal(t, r);
    if (!verdict.is_strict) {
      report.issues.push_back({t.order(), source,
                               "constructed transversal " + r.to_string() +
                                   " is not exact+minimum+strictly bipartiting"});
      continue;
    }
    CoModuleFamily family = minimal_comodules(t);
    if (r.count() != comodular_index(t).size || !r.is_subset_of(family.support))
      report.issues.push_back({t.order(), source,
                               "constructed transversal " + r.to_string() +
                                   " is not an index-sized subset of the family support"});
  }
  return report;
}

SweepReport sweep_theorem8(const SweepOptions& opts) {
  SweepReport report{Sweep::theorem8, 0, {}};
  Corpus corpus;
  for (int n = 4; n <= opts.n_max; ++n) add_classes(corpus, n, opts);
  for (const auto& [t, source] : corpus.items) {
    if (comodular_index(t).size < 3) continue;
    ++report.checked;
    StrictReversalSweep sweep = check_all_strict_reversals(t);
    if (!sweep.all_indecomposable)
      report.issues.push_back({t.order(), source,
                               "strict transversal " + sweep.counterexample->to_string() +
                                   " has a decomposable reversal"});
  }
  return report;
}

SweepReport sweep_theorem9(const SweepOptions& opts) {
  SweepReport report{Sweep::theorem9, 0, {}};
  Corpus corpus;
  for (int n = 5; n <= opts.n_max; ++n) add_classes(corpus, n, opts);
  if (opts.n_max >= 7) {
    add_random(corpus, 30, 8, 10, opts.random_seed ^ 0x99);
    add_planted(corpus, 30, 8, 10, opts.random_seed ^ 0x9A);
  }
  for (const auto& [t, source] : corpus.items) {
    if (is_transitive_of_even_order(t)) continue;
    ++report.checked;
    IndexReport rep = subtournament_index(t);
    BruteForceIndex oracle = brute_subtournament_index(t);
    if (!rep.subtournament_index.has_value() || !oracle.value.has_value()) {
      report.issues.push_back({t.order(), source, "eligible tournament reported impossible"});
      continue;
    }
    if (*rep.subtournament_index != rep.comodular_index ||
        *oracle.value != *rep.subtournament_index) {
      report.issues.push_back(
          {t.order(), source,
           "subtournament index " + std::to_string(*rep.subtournament_index) +
               " vs co-modular index " + std::to_string(rep.comodular_index) +
               " vs exhaustive " + std::to_string(*oracle.value)});
      continue;
    }
    if (!is_indecomposable(invert_vertices(t, rep.witness_vertices)))
      report.issues.push_back({t.order(), source, "reported reversal witness is decomposable"});
  }
  return report;
}

SweepReport sweep_koenig(const SweepOptions& opts) {
  SweepReport report{Sweep::koenig, 0, {}};
  Corpus corpus;
  for (int n = 1; n <= opts.n_max; ++n) add_classes(corpus, n, opts);
  if (opts.n_max >= 7) {
    add_random(corpus, 250, 5, 12, opts.random_seed ^ 0xAA);
    add_planted(corpus, 250, 5, 12, opts.random_seed ^ 0xAB);
  }
  for (const auto& [t, source] : corpus.items) {
    ++report.checked;
    int matching = comodular_index(t).size;
    int transversal = transversal_number(t).size;
    if (matching != transversal)
      report.issues.push_back({t.order(), source,
                               "transversal number " + std::to_string(transversal) +
                                   " differs from matching number " + std::to_string(matching)});
  }
  return report;
}

SweepReport sweep_tables(const SweepOptions& opts) {
  SweepReport report{Sweep::tables, 0, {}};
  if (opts.n_max < 5) return report;
  EnumerationOptions eo;
  eo.allow_order_9 = opts.allow_order_9;
  if (opts.progress) {
    eo.progress = [&opts](int order, std::size_t done, std::size_t total) {
      opts.progress(order, done, total);
    };
  }
  for (const TableRow& row : verify_tables(std::min(opts.n_max, 9), eo)) {
    report.checked += row.class_count;
    for (const TableMismatch& m : row.mismatches)
      report.issues.push_back({m.n, m.code_hex, m.detail});
  }
  return report;
}

}  // namespace

SweepReport run_sweep(Sweep sweep, const SweepOptions& opts) {
  switch (sweep) {
    case Sweep::theorem3: return sweep_theorem3(opts);
    case Sweep::theorem6: return sweep_theorem6(opts);
    case Sweep::theorem8: return sweep_theorem8(opts);
    case Sweep::theorem9: return sweep_theorem9(opts);
    case Sweep::koenig: return sweep_koenig(opts);
    case Sweep::tables: return sweep_tables(opts);
  }
  throw PreconditionError("unknown sweep");
}

}  // namespace tourney
