#pragma once

#include <vector>

#include "tourney/core.hpp"

namespace tourney {

// A module of a tournament is a vertex set every outside vertex relates to
// uniformly (beats all of it or loses to all of it). The empty set, the
// singletons, and the whole vertex set are the trivial modules.
bool is_module(const Tournament& t, const VertexSet& M);

// The unique inclusion-smallest module containing the nonempty seed S,
// obtained by adjoining splitters until none remains.
VertexSet module_closure(const Tournament& t, const VertexSet& S);

// True iff every module is trivial. Orders 0..2 count as indecomposable.
bool is_indecomposable(const Tournament& t);

// Node of the strong-module decomposition tree. A strong module is a module
// that overlaps no other module; the strong modules form a laminar family
// rooted at the full vertex set.
struct MDNode {
  enum class Kind { leaf, prime, linear };

  Kind kind = Kind::leaf;
  VertexSet vertices;
  // linear: ordered so that every vertex of children[i] beats every vertex of
  // children[j] for i < j. prime: ordered by smallest contained vertex.
  std::vector<MDNode> children;
};

// Decomposition tree of t (order >= 1). Internal nodes are classified prime
// (indecomposable quotient on >= 3 children) or linear (transitive quotient).
MDNode decomposition_tree(const Tournament& t);

// Every module M with 2 <= |M| <= n-1, derived from the decomposition tree:
// the proper internal nodes plus all unions of >= 2 consecutive children of
// linear nodes (minus the full vertex set). Sorted by (size, vertex list).
std::vector<VertexSet> all_nontrivial_modules(const Tournament& t);

// All modules of cardinality exactly 2.
std::vector<VertexSet> twins(const Tournament& t);

// A maximal module inducing a transitive subtournament, with its internal
// order recorded: order[i] beats order[j] for i < j.
struct TransitiveComponent {
  std::vector<int> order;
  VertexSet members;

  int size() const { return static_cast<int>(order.size()); }
};

// The transitive components of t; they partition the vertex set. Sorted by
// smallest contained vertex.
std::vector<TransitiveComponent> transitive_components(const Tournament& t);

}  // namespace tourney
