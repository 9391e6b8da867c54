#include "tourney/comodules.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tourney {

namespace {

bool member_of(const std::vector<VertexSet>& family, const VertexSet& s) {
  return std::find(family.begin(), family.end(), s) != family.end();
}

}  // namespace

int CoModuleFamily::find(const VertexSet& members) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i].members == members) return i;
  return -1;
}

CoModuleFamily minimal_comodules(const Tournament& t) {
  const int n = t.order();
  std::vector<VertexSet> modules = all_nontrivial_modules(t);

  // Candidates: minimal nontrivial modules and complements of maximal ones.
  std::vector<VertexSet> candidates;
  for (const VertexSet& m : modules) {
    bool minimal = true, maximal = true;
    for (const VertexSet& o : modules) {
      if (o == m) continue;
      if (o.is_subset_of(m)) minimal = false;
      if (m.is_subset_of(o)) maximal = false;
    }
    if (minimal) candidates.push_back(m);
    if (maximal) candidates.push_back(m.complement());
  }

  std::sort(candidates.begin(), candidates.end(), VertexSet::size_lex_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  CoModuleFamily family;
  family.support = VertexSet(n);
  for (const VertexSet& c : candidates) {
    bool minimal = true;
    for (const VertexSet& o : candidates)
      if (o != c && o.is_subset_of(c)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    bool as_module = member_of(modules, c);
    bool as_complement = member_of(modules, c.complement());
    CoModule cm;
    cm.members = c;
    cm.witness = as_module && as_complement ? CoModuleWitness::both
                 : as_module               ? CoModuleWitness::module
                                           : CoModuleWitness::complement;
    family.support |= c;
    family.elements.push_back(std::move(cm));
  }

  family.overlap_degrees.assign(family.elements.size(), 0);
  for (std::size_t i = 0; i < family.elements.size(); ++i)
    for (std::size_t j = 0; j < family.elements.size(); ++j)
      if (i != j && family.elements[i].members.overlaps(family.elements[j].members))
        ++family.overlap_degrees[i];
  return family;
}

int overlap_degree(const CoModuleFamily& family, const VertexSet& M) {
  int idx = family.find(M);
  if (idx < 0) throw PreconditionError("set " + M.to_string() + " is not in the co-module family");
  return family.overlap_degrees[idx];
}

namespace {

std::vector<VertexSet> chain_in_family(const CoModuleFamily& family, int order,
                                       const TransitiveComponent& C) {
  std::vector<VertexSet> out;
  for (int k = 0; k + 1 < C.size(); ++k) {
    VertexSet pair(order, {C.order[k], C.order[k + 1]});
    const VertexSet* found = nullptr;
    for (const CoModule& e : family.elements) {
      if (!e.members.is_subset_of(pair)) continue;
      if (found != nullptr)
        throw std::logic_error("two minimal co-modules inside one twin: family is inconsistent");
      found = &e.members;
    }
    if (found == nullptr)
      throw std::logic_error("no minimal co-module inside twin " + pair.to_string());
    out.push_back(*found);
  }
  return out;
}

}  // namespace

std::vector<VertexSet> chain_comodules(const Tournament& t, const TransitiveComponent& C) {
  if (t.order() < 3)
    throw PreconditionError("chain elements need a tournament of order >= 3");
  if (C.size() < 2)
    throw PreconditionError("chain elements need a transitive component of size >= 2");
  return chain_in_family(minimal_comodules(t), t.order(), C);
}

MatchingResult comodular_index(const Tournament& t) {
  CoModuleFamily family = minimal_comodules(t);
  MatchingResult result;
  for (const CoModule& e : family.elements)
    if (!e.is_twin()) result.matching.push_back(e.members);

  if (t.order() < 3) {
    result.size = static_cast<int>(result.matching.size());
    return result;
  }

  // Twins chain along each transitive component; a left-to-right greedy is
  // a maximum independent choice on each run of consecutive twins.
  for (const TransitiveComponent& C : transitive_components(t)) {
    if (C.size() < 2) continue;
    std::vector<VertexSet> chain = chain_in_family(family, t.order(), C);
    int last_taken = -2;
    for (int k = 0; k < static_cast<int>(chain.size()); ++k) {
      if (chain[k].count() != 2) continue;  // endpoint singletons are handled above
      if (k - last_taken < 2) continue;
      result.matching.push_back(chain[k]);
      last_taken = k;
    }
  }

  for (std::size_t i = 0; i < result.matching.size(); ++i)
    for (std::size_t j = i + 1; j < result.matching.size(); ++j)
      if (result.matching[i].intersects(result.matching[j]))
        throw std::logic_error("co-modular matching is not disjoint: family is inconsistent");

  std::sort(result.matching.begin(), result.matching.end(), VertexSet::size_lex_less);
  result.size = static_cast<int>(result.matching.size());
  return result;
}

namespace {

struct HittingSearch {
  const std::vector<VertexSet>* sets = nullptr;
  int universe = 0;
  int best_size = 0;
  std::vector<int> best;

  // Pairwise-disjoint members among the still-uncovered sets; any transversal
  // needs at least that many more vertices.
  int disjoint_lower_bound(const std::vector<char>& covered) const {
    VertexSet used(universe);
    int lb = 0;
    for (std::size_t i = 0; i < sets->size(); ++i) {
      if (covered[i]) continue;
      if (!(*sets)[i].intersects(used)) {
        used |= (*sets)[i];
        ++lb;
      }
    }
    return lb;
  }

  void dfs(std::vector<int>& chosen, const std::vector<char>& covered, int uncovered_count) {
    if (uncovered_count == 0) {
      if (static_cast<int>(chosen.size()) < best_size) {
        best_size = static_cast<int>(chosen.size());
        best = chosen;
      }
      return;
    }
    if (static_cast<int>(chosen.size()) + disjoint_lower_bound(covered) >= best_size) return;

    // Branch on the smallest uncovered set.
    int pick = -1;
    for (std::size_t i = 0; i < sets->size(); ++i)
      if (!covered[i] && (pick < 0 || (*sets)[i].count() < (*sets)[pick].count()))
        pick = static_cast<int>(i);

    for (int v : (*sets)[pick].elements()) {
      std::vector<char> next = covered;
      int next_uncovered = uncovered_count;
      for (std::size_t i = 0; i < sets->size(); ++i)
        if (!next[i] && (*sets)[i].contains(v)) {
          next[i] = 1;
          --next_uncovered;
        }
      chosen.push_back(v);
      dfs(chosen, next, next_uncovered);
      chosen.pop_back();
    }
  }
};

}  // namespace

TransversalNumberResult transversal_number(const Tournament& t) {
  CoModuleFamily family = minimal_comodules(t);
  TransversalNumberResult result;
  result.transversal = VertexSet(t.order());
  if (family.elements.empty()) return result;

  std::vector<VertexSet> sets;
  for (const CoModule& e : family.elements) sets.push_back(e.members);

  // Greedy max-coverage incumbent.
  std::vector<int> greedy;
  {
    std::vector<char> covered(sets.size(), 0);
    int remaining = static_cast<int>(sets.size());
    while (remaining > 0) {
      int best_v = -1, best_hits = 0;
      for (int v : family.support.elements()) {
        int hits = 0;
        for (std::size_t i = 0; i < sets.size(); ++i)
          if (!covered[i] && sets[i].contains(v)) ++hits;
        if (hits > best_hits) {
          best_hits = hits;
          best_v = v;
        }
      }
      greedy.push_back(best_v);
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (!covered[i] && sets[i].contains(best_v)) {
          covered[i] = 1;
          --remaining;
        }
    }
  }

  HittingSearch search;
  search.sets = &sets;
  search.universe = t.order();
  search.best_size = static_cast<int>(greedy.size());
  search.best = greedy;

  std::vector<char> covered(sets.size(), 0);
  std::vector<int> chosen;
  search.dfs(chosen, covered, static_cast<int>(sets.size()));

  result.size = search.best_size;
  result.transversal = VertexSet(t.order(), search.best);
  return result;
}

}  // namespace tourney
