#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tourney/comodules.hpp"
#include "tourney/enumerate.hpp"
#include "tourney/generators.hpp"
#include "oracles.hpp"

using namespace tourney;

namespace {

Tournament c3() { return make_tournament(3, {{0, 1}, {1, 2}, {2, 0}}); }

std::vector<VertexSet> member_sets(const CoModuleFamily& f) {
  std::vector<VertexSet> out;
  for (const CoModule& e : f.elements) out.push_back(e.members);
  return out;
}

// The unit-test corpus: all classes up to order 6 plus a few dozen random
// tournaments up to order 11 (the acceptance suite runs the larger batches).
std::vector<Tournament> corpus() {
  std::vector<Tournament> out;
  for (int n = 1; n <= 6; ++n)
    for (Tournament& t : all_tournaments(n)) out.push_back(std::move(t));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::uint64_t state = seed + 4242;
    int n = 7 + static_cast<int>(splitmix64_next(state) % 5);
    out.push_back(random_tournament(n, splitmix64_next(state)));
  }
  return out;
}

}  // namespace

TEST_CASE("minimal co-modules: pinned families") {
  CoModuleFamily f5 = minimal_comodules(transitive_tournament(5));
  CHECK(member_sets(f5) == std::vector<VertexSet>{VertexSet(5, {0}), VertexSet(5, {4}),
                                                  VertexSet(5, {1, 2}), VertexSet(5, {2, 3})});
  CHECK(f5.elements[0].witness == CoModuleWitness::complement);
  CHECK(f5.elements[2].witness == CoModuleWitness::module);

  CoModuleFamily f6 = minimal_comodules(tn_family(6));
  CHECK(member_sets(f6) ==
        std::vector<VertexSet>{VertexSet(6, {5}), VertexSet(6, {0, 1, 2, 3, 4})});

  CHECK(minimal_comodules(c3()).elements.empty());
  CHECK(minimal_comodules(transitive_tournament(2)).elements.empty());
}

TEST_CASE("minimal co-modules equal the subset oracle") {
  for (const Tournament& t : corpus())
    CHECK(member_sets(minimal_comodules(t)) == oracles::minimal_comodules_brute(t));
}

TEST_CASE("witness classification is definitional") {
  for (const Tournament& t : corpus()) {
    CoModuleFamily family = minimal_comodules(t);
    std::vector<VertexSet> mods = oracles::modules_brute(t);
    auto in_mods = [&](const VertexSet& s) {
      return std::find(mods.begin(), mods.end(), s) != mods.end();
    };
    int not_modules = 0, singletons = 0;
    for (const CoModule& e : family.elements) {
      bool as_module = in_mods(e.members);
      bool as_complement = in_mods(e.members.complement());
      CHECK((as_module || as_complement));
      CHECK(e.module_type() == as_module);
      if (!as_module) ++not_modules;
      if (e.members.count() == 1) ++singletons;
    }
    CHECK(not_modules <= 2);  // at most two elements that are not modules
    CHECK(singletons <= 2);
    if (!is_indecomposable(t) && t.order() >= 4) {
      bool has_module_type = false;
      for (const CoModule& e : family.elements) has_module_type |= e.module_type();
      CHECK(has_module_type);
    }
  }
}

TEST_CASE("overlap degrees") {
  Tournament t5 = transitive_tournament(5);
  CoModuleFamily f5 = minimal_comodules(t5);
  CHECK(overlap_degree(f5, VertexSet(5, {1, 2})) == 1);
  CHECK(overlap_degree(f5, VertexSet(5, {0})) == 0);
  CHECK_THROWS_AS(overlap_degree(f5, VertexSet(5, {1, 3})), PreconditionError);

  for (const Tournament& t : corpus()) {
    CoModuleFamily family = minimal_comodules(t);
    for (int i = 0; i < family.size(); ++i) {
      CHECK(family.overlap_degrees[i] <= 2);
      if (!family.elements[i].is_twin()) {
        CHECK(family.overlap_degrees[i] == 0);
        // Disjoint from every other element outright.
        for (int j = 0; j < family.size(); ++j)
          if (i != j)
            CHECK(!family.elements[i].members.intersects(family.elements[j].members));
      }
      // Pairwise incomparable: disjoint or properly overlapping.
      for (int j = 0; j < family.size(); ++j) {
        if (i == j) continue;
        const VertexSet& a = family.elements[i].members;
        const VertexSet& b = family.elements[j].members;
        CHECK((!a.intersects(b) || a.overlaps(b)));
      }
    }
  }
}

TEST_CASE("chain elements along a transitive component") {
  Tournament t5 = transitive_tournament(5);
  TransitiveComponent whole = transitive_components(t5)[0];
  CHECK(chain_comodules(t5, whole) ==
        std::vector<VertexSet>{VertexSet(5, {0}), VertexSet(5, {1, 2}), VertexSet(5, {2, 3}),
                               VertexSet(5, {4})});

  TransitiveComponent tiny;
  tiny.order = {0};
  tiny.members = VertexSet(5, {0});
  CHECK_THROWS_AS(chain_comodules(t5, tiny), PreconditionError);

  // The chain is exactly the set of minimal co-modules meeting the component.
  for (const Tournament& t : corpus()) {
    if (t.order() < 3) continue;
    CoModuleFamily family = minimal_comodules(t);
    for (const TransitiveComponent& c : transitive_components(t)) {
      if (c.size() < 2) continue;
      std::vector<VertexSet> chain = chain_comodules(t, c);
      std::vector<VertexSet> meeting;
      for (const CoModule& e : family.elements)
        if (e.members.intersects(c.members)) meeting.push_back(e.members);
      std::vector<VertexSet> as_set = chain;
      std::sort(as_set.begin(), as_set.end(), VertexSet::size_lex_less);
      as_set.erase(std::unique(as_set.begin(), as_set.end()), as_set.end());
      std::sort(meeting.begin(), meeting.end(), VertexSet::size_lex_less);
      CHECK(as_set == meeting);
    }
  }
}

TEST_CASE("co-modular index with witness") {
  MatchingResult d5 = comodular_index(transitive_tournament(5));
  CHECK(d5.size == 3);
  CHECK(d5.matching == std::vector<VertexSet>{VertexSet(5, {0}), VertexSet(5, {4}),
                                              VertexSet(5, {1, 2})});
  CHECK(comodular_index(tn_family(6)).size == 2);
  CHECK(comodular_index(c3()).size == 0);

  for (const Tournament& t : corpus()) {
    MatchingResult res = comodular_index(t);
    CHECK(res.size ==
          oracles::matching_number_brute(oracles::minimal_comodules_brute(t), t.order()));
    VertexSet used(t.order());
    for (const VertexSet& m : res.matching) {
      CHECK(!m.intersects(used));
      used |= m;
    }
    if (!is_indecomposable(t)) CHECK(res.size >= 2);
  }
}

TEST_CASE("transversal number with witness, and the matching bound") {
  TransversalNumberResult t5 = transversal_number(transitive_tournament(5));
  CHECK(t5.size == 3);
  CHECK(t5.transversal == VertexSet(5, {0, 2, 4}));
  CHECK(transversal_number(tn_family(6)).size == 2);

  for (const Tournament& t : corpus()) {
    std::vector<VertexSet> family = oracles::minimal_comodules_brute(t);
    TransversalNumberResult res = transversal_number(t);
    CHECK(res.size == oracles::transversal_number_brute(family, t.order()));
    for (const VertexSet& f : family) CHECK(f.intersects(res.transversal));
    CHECK(res.transversal.count() == res.size);
    // Equality with the matching number, even for even transitive orders.
    CHECK(res.size == comodular_index(t).size);
  }
}
