#include "tourney/indices.hpp"

#include <algorithm>
#include <stdexcept>

#include "tourney/comodules.hpp"
#include "tourney/modules.hpp"

namespace tourney {

namespace {

// Visits subsets of items of the given size in lexicographic order until the
// callback returns true; reports whether any call did.
template <typename F>
bool for_each_subset_of_size(const std::vector<int>& items, int size, F&& f) {
  const int n = static_cast<int>(items.size());
  if (size > n) return false;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    std::vector<int> subset;
    subset.reserve(size);
    for (int i : idx) subset.push_back(items[i]);
    if (f(subset)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

IndexReport subtournament_index(const Tournament& t) {
  const int n = t.order();
  if (n < 5)
    throw PreconditionError("subtournament index is defined for order >= 5; "
                            "use brute_subtournament_index for smaller inputs");

  IndexReport rep;
  rep.witness_vertices = VertexSet(n);
  rep.witness_transversal = VertexSet(n);

  if (is_transitive_of_even_order(t)) {
    rep.subtournament_index = std::nullopt;
    rep.comodular_index = comodular_index(t).size;
    rep.arc_index = (rep.comodular_index + 1) / 2;
    return rep;
  }

  rep.comodular_index = comodular_index(t).size;
  rep.arc_index = (rep.comodular_index + 1) / 2;

  if (is_indecomposable(t)) {
    rep.subtournament_index = 0;
    rep.method = IndexMethod::indecomposable_input;
    return rep;
  }

  if (rep.comodular_index >= 3) {
    VertexSet r = build_transversal(t);
    if (!is_indecomposable(invert_vertices(t, r)))
      throw std::logic_error("constructed strict transversal gave a decomposable reversal: "
                             "library bug");
    rep.subtournament_index = rep.comodular_index;
    rep.witness_vertices = r;
    rep.witness_transversal = r;
    rep.method = IndexMethod::construction;
    return rep;
  }

  // Co-modular index 2: strict transversals first, then all 2-subsets.
  std::vector<VertexSet> tried;
  for (const VertexSet& r : enumerate_strict_transversals(t)) {
    tried.push_back(r);
    if (is_indecomposable(invert_vertices(t, r))) {
      rep.subtournament_index = 2;
      rep.witness_vertices = r;
      rep.witness_transversal = r;
      rep.method = IndexMethod::pair_search;
      return rep;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      VertexSet r(n, {x, y});
      if (std::find(tried.begin(), tried.end(), r) != tried.end()) continue;
      if (is_indecomposable(invert_vertices(t, r))) {
        rep.subtournament_index = 2;
        rep.witness_vertices = r;
        rep.witness_transversal = r;
        rep.method = IndexMethod::pair_search;
        return rep;
      }
    }
  throw std::logic_error("no 2-subset reversal is indecomposable at co-modular index 2: "
                         "library bug");
}

ArcIndexResult arc_index(const Tournament& t, bool want_witness, std::uint64_t budget) {
  if (t.order() < 5) throw PreconditionError("arc index is defined for order >= 5");
  ArcIndexResult result;
  result.value = (comodular_index(t).size + 1) / 2;
  if (!want_witness) return result;
  if (result.value == 0) {
    result.witness = std::vector<Arc>{};
    return result;
  }

  std::vector<Arc> arcs = t.arcs();
  std::vector<int> arc_ids(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) arc_ids[i] = static_cast<int>(i);

  std::uint64_t used = 0;
  for_each_subset_of_size(arc_ids, result.value, [&](const std::vector<int>& subset) {
    if (++used > budget) return true;  // give up, value stands without witness
    std::vector<Arc> b;
    for (int id : subset) b.push_back(arcs[id]);
    if (!is_indecomposable(invert_arcs(t, b))) return false;
    result.witness = b;
    return true;
  });
  return result;
}

BruteForceIndex brute_subtournament_index(const Tournament& t, int order_cap) {
  const int n = t.order();
  if (n > order_cap)
    throw CapError("brute-force subtournament index capped at order " +
                   std::to_string(order_cap));
  BruteForceIndex result;
  result.witness = VertexSet(n);
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  for (int size = 0; size <= n; ++size) {
    bool found = for_each_subset_of_size(verts, size, [&](const std::vector<int>& subset) {
      VertexSet x(n, subset);
      if (is_indecomposable(invert_vertices(t, x))) {
        result.witness = x;
        return true;
      }
      return false;
    });
    if (found) {
      result.value = size;
      return result;
    }
  }
  return result;  // nullopt: no reversal works
}

std::optional<int> brute_arc_index(const Tournament& t, int order_cap) {
  if (t.order() > order_cap)
    throw CapError("brute-force arc index capped at order " + std::to_string(order_cap));
  std::vector<Arc> arcs = t.arcs();
  std::vector<int> arc_ids(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) arc_ids[i] = static_cast<int>(i);
  for (int size = 0; size <= static_cast<int>(arcs.size()); ++size) {
    bool found = for_each_subset_of_size(arc_ids, size, [&](const std::vector<int>& subset) {
      std::vector<Arc> b;
      for (int id : subset) b.push_back(arcs[id]);
      return is_indecomposable(invert_arcs(t, b));
    });
    if (found) return size;
  }
  return std::nullopt;
}

StrictReversalSweep check_all_strict_reversals(const Tournament& t, std::uint64_t subset_cap) {
  if (comodular_index(t).size < 3)
    throw PreconditionError("strict-reversal sweep applies only at co-modular index >= 3");
  StrictReversalSweep sweep;
  for (const VertexSet& r : enumerate_strict_transversals(t, subset_cap))
    if (!is_indecomposable(invert_vertices(t, r))) {
      sweep.all_indecomposable = false;
      sweep.counterexample = r;
      return sweep;
    }
  return sweep;
}

bool has_decomposable_strict_reversal(const Tournament& t, std::uint64_t subset_cap) {
  for (const VertexSet& r : enumerate_strict_transversals(t, subset_cap))
    if (!is_indecomposable(invert_vertices(t, r))) return true;
  return false;
}

}  // namespace tourney
