#include "tourney/transversal.hpp"

#include <algorithm>

namespace tourney {

namespace {

VertexSet component_slice(const Tournament& t, const CoModuleFamily& family,
                          const TransitiveComponent& C) {
  const int m = C.size();
  bool head = family.find(VertexSet(t.order(), {C.order[0]})) >= 0;
  bool tail = family.find(VertexSet(t.order(), {C.order[m - 1]})) >= 0;
  if (head && tail && m % 2 == 0)
    throw TransitiveEvenError("both endpoint singletons are minimal co-modules: "
                              "transitive of even order");

  VertexSet r(t.order());
  if (head) {
    for (int i = 0; i < m; i += 2) r.insert(C.order[i]);
  } else if (tail) {
    for (int i = 1; m - i >= 0; i += 2) r.insert(C.order[m - i]);
  } else {
    for (int i = 1; i < m; i += 2) r.insert(C.order[i]);
  }
  return r;
}

}  // namespace

VertexSet component_transversal(const Tournament& t, const TransitiveComponent& C) {
  if (C.size() < 2)
    throw PreconditionError("component transversal needs a component of size >= 2");
  return component_slice(t, minimal_comodules(t), C);
}

VertexSet build_transversal(const Tournament& t) {
  if (is_indecomposable(t))
    throw IndecomposableInputError("transversal construction needs a decomposable tournament");
  if (is_transitive_of_even_order(t))
    throw TransitiveEvenError("transversal construction is undefined for transitive "
                              "tournaments of even order");

  CoModuleFamily family = minimal_comodules(t);
  VertexSet r(t.order());
  for (const CoModule& e : family.elements)
    if (!e.is_twin()) r.insert(e.members.smallest());
  for (const TransitiveComponent& C : transitive_components(t))
    if (C.size() >= 2) r |= component_slice(t, family, C);
  return r;
}

namespace {

// The four verdicts against precomputed structures, so that candidate loops
// do not rebuild the decomposition per candidate.
TransversalReport classify_against(const VertexSet& R, const CoModuleFamily& family,
                                   const std::vector<VertexSet>& modules,
                                   int transversal_size) {
  TransversalReport rep;
  rep.set = R;
  rep.is_transversal = true;
  rep.is_exact = true;
  for (const CoModule& e : family.elements) {
    int hits = (e.members & R).count();
    if (hits == 0) rep.is_transversal = false;
    if (hits != 1) rep.is_exact = false;
  }
  rep.is_minimum = R.count() == transversal_size;
  rep.strictly_bipartite = true;
  for (const VertexSet& m : modules)
    if (!R.overlaps(m)) {
      rep.strictly_bipartite = false;
      break;
    }
  rep.is_strict = rep.is_transversal && rep.is_exact && rep.is_minimum && rep.strictly_bipartite;
  return rep;
}

}  // namespace

TransversalReport classify_transversal(const Tournament& t, const VertexSet& R) {
  if (R.universe() != t.order())
    throw PreconditionError("vertex set universe does not match tournament order");
  return classify_against(R, minimal_comodules(t), all_nontrivial_modules(t),
                          transversal_number(t).size);
}

std::vector<VertexSet> enumerate_strict_transversals(const Tournament& t,
                                                     std::uint64_t subset_cap) {
  const int size = comodular_index(t).size;  // every strict transversal has this size
  CoModuleFamily family = minimal_comodules(t);
  std::vector<VertexSet> modules = all_nontrivial_modules(t);
  const int tau = transversal_number(t).size;
  std::vector<int> support = family.support.elements();
  const int s = static_cast<int>(support.size());

  // Candidate count = C(s, size); bail out before generating when too big.
  std::uint64_t candidates = 1;
  for (int i = 0; i < size; ++i) {
    candidates = candidates * static_cast<std::uint64_t>(s - i) / (i + 1);
    if (candidates > subset_cap)
      throw CapError("strict-transversal search too large: more than " +
                     std::to_string(subset_cap) + " candidate subsets");
  }

  std::vector<VertexSet> out;
  if (size > s) return out;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    VertexSet r(t.order());
    for (int i : idx) r.insert(support[i]);
    if (classify_against(r, family, modules, tau).is_strict) out.push_back(r);
    // Next lexicographic combination.
    int i = size - 1;
    while (i >= 0 && idx[i] == s - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace tourney
