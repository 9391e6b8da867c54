#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tourney/errors.hpp"

namespace tourney {

// Hard default for the largest tournament order the library will construct.
// Everything here is polynomial but matrix-backed, so the cap mostly guards
// against accidental huge inputs. Adjustable at runtime (see set_max_order).
inline constexpr int kDefaultMaxOrder = 512;

int max_order();
void set_max_order(int n);

struct Arc {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& a);  // "(tail,head)"

// A subset of the vertices 0..universe-1, stored as a bitset. Every set
// remembers the universe it lives in so that complements are unambiguous.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> vertices);
  VertexSet(int universe, const std::vector<int>& vertices);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  int count() const;
  bool empty() const { return count() == 0; }

  bool contains(int v) const;
  void insert(int v);
  void erase(int v);

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const;

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  // Proper overlap: nonempty intersection and nonempty difference both ways.
  bool overlaps(const VertexSet& o) const;

  // Members in ascending order.
  std::vector<int> elements() const;
  int smallest() const;  // -1 when empty

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Deterministic ordering used for all module/co-module listings:
  // by cardinality, then by the ascending vertex sequence.
  static bool size_lex_less(const VertexSet& a, const VertexSet& b);

  std::string to_string() const;  // "{0,2,4}"

 private:
  void check_vertex(int v) const;
  void check_same_universe(const VertexSet& o) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// An immutable tournament on vertices 0..n-1: a complete antisymmetric
// orientation of all vertex pairs. Values are safe to share freely.
class Tournament {
 public:
  // Incremental construction helper; build() checks that every pair got
  // exactly one orientation.
  class Builder {
   public:
    explicit Builder(int n);
    // Sets the pair {x,y} to the arc x -> y, overwriting any previous choice.
    void orient(int x, int y);
    bool oriented(int x, int y) const;
    Tournament build() const;

   private:
    int n_;
    std::vector<VertexSet> beats_;
    std::vector<VertexSet> decided_;
  };

  int order() const { return n_; }
  bool beats(int x, int y) const;  // adjacency; never defined on (x,x)
  int out_degree(int x) const { return rows_[x].count(); }
  const VertexSet& out_neighbors(int x) const { return rows_[x]; }

  std::vector<Arc> arcs() const;  // ascending (tail, head)

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  friend class Builder;
  friend Tournament invert_arcs(const Tournament&, const std::vector<Arc>&);
  friend Tournament invert_vertices(const Tournament&, const VertexSet&);
  Tournament(int n, std::vector<VertexSet> rows);

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

// Validating constructor: arcs must orient every unordered pair exactly once.
// Missing, duplicate, contradictory, or self-loop entries raise a
// ValidationError naming the pair.
Tournament make_tournament(int n, const std::vector<Arc>& arcs);

// Reverses exactly the arcs in B; every element must be an arc of t.
Tournament invert_arcs(const Tournament& t, const std::vector<Arc>& B);

// Reverses every arc with both endpoints in X. Involution for fixed X.
Tournament invert_vertices(const Tournament& t, const VertexSet& X);

// All arcs reversed.
Tournament dual(const Tournament& t);

struct InducedSubtournament {
  Tournament t;
  std::vector<int> vertices;  // vertices[i] = original label of new vertex i
};

// Induced subtournament on W with order-preserving relabeling to 0..|W|-1.
InducedSubtournament subtournament(const Tournament& t, const VertexSet& W);

// True iff the dominance relation is a total order; equivalent to the
// out-degrees being a permutation of 0..n-1.
bool is_transitive(const Tournament& t);

bool is_transitive_of_even_order(const Tournament& t);

}  // namespace tourney
