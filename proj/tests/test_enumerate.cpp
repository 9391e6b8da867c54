#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tourney/enumerate.hpp"
#include "tourney/generators.hpp"
#include "tourney/modules.hpp"
#include "oracles.hpp"

using namespace tourney;

namespace {

Tournament c3() { return make_tournament(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("canonical codes identify isomorphism classes") {
  CHECK(canonical_code(c3()) == canonical_code(dual(c3())));
  CHECK(canonical_code(c3()) != canonical_code(transitive_tournament(3)));
  CHECK(canonical_code(transitive_tournament(4)) ==
        canonical_code(invert_arcs(transitive_tournament(4), {{0, 1}})));
  CHECK_THROWS_AS(canonical_code(transitive_tournament(10)), CapError);
}

TEST_CASE("canonical code is idempotent and relabeling-invariant") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    std::uint64_t state = seed + 8;
    int n = 1 + static_cast<int>(splitmix64_next(state) % 8);
    Tournament t = random_tournament(n, splitmix64_next(state));
    CanonicalCode code = canonical_code(t);
    Tournament canon = tournament_from_code(code);
    CHECK(canonical_code(canon) == code);
    std::vector<int> perm = oracles::random_permutation(n, splitmix64_next(state));
    CHECK(canonical_code(oracles::apply_relabeling(t, perm)) == code);
  }
}

TEST_CASE("class counts for small orders") {
  const std::size_t expected[] = {0, 1, 1, 2, 4, 12, 56, 456};
  for (int n = 1; n <= 7; ++n) CHECK(all_tournaments(n).size() == expected[n]);

  std::vector<Tournament> order3 = all_tournaments(3);
  CHECK(is_indecomposable(order3[0]) != is_indecomposable(order3[1]));
  for (const Tournament& t : all_tournaments(4)) CHECK(!is_indecomposable(t));

  CHECK_THROWS_AS(all_tournaments(9), CapError);  // opt-in only
  CHECK_THROWS_AS(all_tournaments(0), PreconditionError);
}

TEST_CASE("representatives are pairwise non-isomorphic and canonical") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Tournament> reps = all_tournaments(n);
    std::vector<std::uint64_t> codes;
    for (const Tournament& t : reps) {
      CanonicalCode c = canonical_code(t);
      CHECK(tournament_from_code(c) == t);  // stored in canonical form
      codes.push_back(c.bits);
    }
    std::sort(codes.begin(), codes.end());
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
  }
}

TEST_CASE("orbit counting: class sizes add up to all labeled tournaments") {
  for (int n = 2; n <= 6; ++n) {
    std::size_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    std::size_t total = 0;
    for (const Tournament& t : all_tournaments(n))
      total += factorial / oracles::automorphism_count(t);
    CHECK(total == (1ULL << (n * (n - 1) / 2)));
  }
}

TEST_CASE("index tables up to order 6") {
  std::vector<TableRow> rows = verify_tables(6);
  REQUIRE(rows.size() == 2);

  CHECK(rows[0].n == 5);
  CHECK(rows[0].class_count == 12);
  CHECK(rows[0].max_comodular_index == 3);
  CHECK(rows[0].max_arc_index == 2);
  CHECK(rows[0].max_subtournament_index == 3);
  CHECK(rows[0].mismatches.empty());

  CHECK(rows[1].n == 6);
  CHECK(rows[1].class_count == 56);
  CHECK(rows[1].max_comodular_index == 4);
  CHECK(rows[1].max_arc_index == 2);
  CHECK(rows[1].max_subtournament_index == 3);  // the single exceptional order
  CHECK(rows[1].mismatches.empty());

  CHECK_THROWS_AS(verify_tables(4), PreconditionError);
  CHECK_THROWS_AS(verify_tables(9), CapError);
}
