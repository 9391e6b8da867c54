#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tourney/enumerate.hpp"
#include "tourney/generators.hpp"
#include "tourney/indices.hpp"
#include "tourney/sweeps.hpp"
#include "oracles.hpp"

using namespace tourney;

namespace {

// All minimum-size reversal sets, straight from the definition.
std::vector<VertexSet> minimum_reversal_sets(const Tournament& t) {
  const int n = t.order();
  std::vector<VertexSet> out;
  for (int size = 0; size <= n && out.empty(); ++size)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      VertexSet x = oracles::from_mask(n, mask);
      if (oracles::indecomposable_brute(invert_vertices(t, x))) out.push_back(x);
    }
  return out;
}

}  // namespace

TEST_CASE("subtournament index: constructive path") {
  IndexReport r5 = subtournament_index(transitive_tournament(5));
  CHECK(r5.subtournament_index == 3);
  CHECK(r5.comodular_index == 3);
  CHECK(r5.arc_index == 2);
  CHECK(r5.witness_vertices == VertexSet(5, {0, 2, 4}));
  CHECK(r5.method == IndexMethod::construction);
  CHECK(is_indecomposable(invert_vertices(transitive_tournament(5), r5.witness_vertices)));
}

TEST_CASE("subtournament index: pair search at co-modular index 2") {
  Tournament t6 = tn_family(6);
  IndexReport r = subtournament_index(t6);
  CHECK(r.subtournament_index == 2);
  CHECK(r.method == IndexMethod::pair_search);
  CHECK(is_indecomposable(invert_vertices(t6, r.witness_vertices)));
  // The witness is itself a strict transversal (minimum size + indecomposable
  // reversal forces that).
  CHECK(classify_transversal(t6, r.witness_vertices).is_strict);
  // ... but not every strict transversal works at index 2.
  CHECK(!is_indecomposable(invert_vertices(t6, VertexSet(6, {1, 5}))));
}

TEST_CASE("subtournament index: edge inputs") {
  IndexReport imp = subtournament_index(transitive_tournament(6));
  CHECK(!imp.subtournament_index.has_value());

  Tournament prime5 = invert_vertices(transitive_tournament(5), VertexSet(5, {0, 2, 4}));
  IndexReport zero = subtournament_index(prime5);
  CHECK(zero.subtournament_index == 0);
  CHECK(zero.method == IndexMethod::indecomposable_input);
  CHECK(zero.witness_vertices.empty());

  CHECK_THROWS_AS(subtournament_index(transitive_tournament(4)), PreconditionError);
}

TEST_CASE("arc index") {
  ArcIndexResult a5 = arc_index(transitive_tournament(5), true);
  CHECK(a5.value == 2);
  REQUIRE(a5.witness.has_value());
  CHECK(a5.witness->size() == 2);
  CHECK(is_indecomposable(invert_arcs(transitive_tournament(5), *a5.witness)));

  ArcIndexResult a6 = arc_index(tn_family(6), true);
  CHECK(a6.value == 1);
  REQUIRE(a6.witness.has_value());
  CHECK(a6.witness->size() == 1);
  CHECK(is_indecomposable(invert_arcs(tn_family(6), *a6.witness)));

  Tournament prime5 = invert_vertices(transitive_tournament(5), VertexSet(5, {0, 2, 4}));
  CHECK(arc_index(prime5).value == 0);

  // Applies to transitive tournaments of even order too.
  ArcIndexResult a_even = arc_index(transitive_tournament(6), true);
  CHECK(a_even.value == 2);
  REQUIRE(a_even.witness.has_value());
  CHECK(is_indecomposable(invert_arcs(transitive_tournament(6), *a_even.witness)));

  CHECK_THROWS_AS(arc_index(transitive_tournament(4)), PreconditionError);
}

TEST_CASE("exhaustive subtournament index") {
  BruteForceIndex b5 = brute_subtournament_index(transitive_tournament(5));
  CHECK(b5.value == 3);
  CHECK(is_indecomposable(invert_vertices(transitive_tournament(5), b5.witness)));

  CHECK(!brute_subtournament_index(transitive_tournament(6)).value.has_value());

  Tournament prime5 = invert_vertices(transitive_tournament(5), VertexSet(5, {0, 2, 4}));
  CHECK(brute_subtournament_index(prime5).value == 0);

  CHECK_THROWS_AS(brute_subtournament_index(transitive_tournament(13)), CapError);
}

TEST_CASE("exhaustive arc index") {
  CHECK(brute_arc_index(transitive_tournament(5)) == 2);
  CHECK(brute_arc_index(transitive_tournament(7)) == 2);
  Tournament prime5 = invert_vertices(transitive_tournament(5), VertexSet(5, {0, 2, 4}));
  CHECK(brute_arc_index(prime5) == 0);
  // Order 4: no arc reversal can help.
  CHECK(!brute_arc_index(transitive_tournament(4)).has_value());
  CHECK_THROWS_AS(brute_arc_index(transitive_tournament(8)), CapError);
}

TEST_CASE("indices agree on every class of orders 5 and 6") {
  for (int n : {5, 6}) {
    for (const Tournament& t : all_tournaments(n)) {
      if (is_transitive_of_even_order(t)) {
        CHECK(!brute_subtournament_index(t).value.has_value());
        continue;
      }
      IndexReport rep = subtournament_index(t);
      BruteForceIndex brute = brute_subtournament_index(t);
      REQUIRE(rep.subtournament_index.has_value());
      CHECK(*rep.subtournament_index == rep.comodular_index);
      CHECK(*brute.value == *rep.subtournament_index);
      CHECK(rep.arc_index == (rep.comodular_index + 1) / 2);
      CHECK(brute_arc_index(t) == rep.arc_index);
      CHECK(is_indecomposable(invert_vertices(t, rep.witness_vertices)));

      // Minimum witnesses of the right size are always strict transversals.
      if (*rep.subtournament_index == rep.comodular_index)
        for (const VertexSet& x : minimum_reversal_sets(t))
          CHECK(classify_transversal(t, x).is_strict);
    }
  }
}

TEST_CASE("construction scales past the enumeration range") {
  // Planted decomposable tournaments well beyond brute-force reach: the
  // report must stay internally consistent and its reversal must check out.
  for (std::uint64_t seed = 50; seed < 56; ++seed) {
    std::uint64_t state = seed;
    int n = 13 + static_cast<int>(splitmix64_next(state) % 6);  // 13..18
    Tournament t = random_decomposable(n, splitmix64_next(state));
    if (is_transitive_of_even_order(t)) continue;
    IndexReport rep = subtournament_index(t);
    REQUIRE(rep.subtournament_index.has_value());
    CHECK(*rep.subtournament_index == rep.comodular_index);
    CHECK(rep.arc_index == (rep.comodular_index + 1) / 2);
    CHECK(is_indecomposable(invert_vertices(t, rep.witness_vertices)));
    CHECK(classify_transversal(t, rep.witness_vertices).is_strict);
  }
}

TEST_CASE("reversal sweep at co-modular index >= 3") {
  CHECK(check_all_strict_reversals(transitive_tournament(5)).all_indecomposable);
  CHECK(check_all_strict_reversals(transitive_tournament(7)).all_indecomposable);
  CHECK(check_all_strict_reversals(fact2_family(8)).all_indecomposable);
  CHECK_THROWS_AS(check_all_strict_reversals(tn_family(6)), PreconditionError);
}

TEST_CASE("tournaments whose strict reversals can stay decomposable") {
  CHECK(has_decomposable_strict_reversal(tn_family(6)));
  CHECK(has_decomposable_strict_reversal(tn_family(9)));
  CHECK(!has_decomposable_strict_reversal(transitive_tournament(5)));

  // Membership forces co-modular index 2, and the containment is proper:
  // some index-2 tournament has only indecomposable strict reversals.
  bool found_strict_only = false;
  for (int n : {5, 6}) {
    for (const Tournament& t : all_tournaments(n)) {
      if (is_transitive_of_even_order(t)) continue;
      bool member = has_decomposable_strict_reversal(t);
      if (member) CHECK(comodular_index(t).size == 2);
      if (!member && comodular_index(t).size == 2) found_strict_only = true;
    }
  }
  CHECK(found_strict_only);
}
