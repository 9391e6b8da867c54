#pragma once

#include <vector>

#include "tourney/core.hpp"
#include "tourney/modules.hpp"

namespace tourney {

// Why a vertex set qualifies as a co-module: the set itself is a nontrivial
// module, its complement is, or both are.
enum class CoModuleWitness { module, complement, both };

struct CoModule {
  VertexSet members;
  CoModuleWitness witness = CoModuleWitness::module;

  bool is_twin() const { return members.count() == 2 && witness != CoModuleWitness::complement; }
  // Member of the module-type part of the family (the set itself is a
  // nontrivial module).
  bool module_type() const { return witness != CoModuleWitness::complement; }
};

// The inclusion-minimal co-modules of a tournament, with overlap degrees.
//
// Structure guaranteed by the theory and re-checked in the test suite:
// elements are pairwise incomparable, at most two are not themselves modules,
// at most two are singletons, and every element that is not a twin is
// disjoint from all others.
struct CoModuleFamily {
  std::vector<CoModule> elements;     // sorted by (size, vertex list)
  std::vector<int> overlap_degrees;   // parallel to elements
  VertexSet support;                  // union of all elements

  int size() const { return static_cast<int>(elements.size()); }
  // Index of the element with this vertex set, or -1.
  int find(const VertexSet& members) const;
};

CoModuleFamily minimal_comodules(const Tournament& t);

// Number of other family elements properly overlapping M; M must belong to
// the family.
int overlap_degree(const CoModuleFamily& family, const VertexSet& M);

// The minimal co-modules meeting a transitive component C with |C| >= 2,
// listed along the component's order: entry k is the unique family element
// inside {v_k, v_{k+1}}.
std::vector<VertexSet> chain_comodules(const Tournament& t, const TransitiveComponent& C);

struct MatchingResult {
  int size = 0;
  std::vector<VertexSet> matching;  // one maximum pairwise-disjoint subfamily
};

// The co-modular index: maximum number of pairwise disjoint minimal
// co-modules. Non-twin elements are disjoint from everything and always
// selected; twin chains inside each transitive component are solved by a
// left-to-right greedy. Zero for indecomposable tournaments.
MatchingResult comodular_index(const Tournament& t);

struct TransversalNumberResult {
  int size = 0;
  VertexSet transversal;
};

// Exact minimum size of a vertex set meeting every minimal co-module,
// computed by branch and bound. The witness is deterministic.
TransversalNumberResult transversal_number(const Tournament& t);

}  // namespace tourney
