#include "tourney/modules.hpp"

#include <algorithm>
#include <cassert>

namespace tourney {

namespace {

// Uniformity of v against W: v beats all of W or none of it.
bool uniform_to(const Tournament& t, int v, const VertexSet& W) {
  VertexSet hit = t.out_neighbors(v) & W;
  return hit.empty() || hit == W;
}

// Closure restricted to the induced subtournament on ground; S must be a
// nonempty subset of ground. Splitters are adjoined in batches.
VertexSet closure_within(const Tournament& t, const VertexSet& ground, const VertexSet& S) {
  VertexSet W = S;
  for (;;) {
    VertexSet grown = W;
    for (int v : (ground - W).elements()) {
      VertexSet hit = t.out_neighbors(v) & W;
      if (!hit.empty() && hit != W) grown.insert(v);
    }
    if (grown == W) return W;
    W = grown;
  }
}

}  // namespace

bool is_module(const Tournament& t, const VertexSet& M) {
  if (M.universe() != t.order())
    throw PreconditionError("vertex set universe does not match tournament order");
  for (int v : M.complement().elements())
    if (!uniform_to(t, v, M)) return false;
  return true;
}

VertexSet module_closure(const Tournament& t, const VertexSet& S) {
  if (S.universe() != t.order())
    throw PreconditionError("vertex set universe does not match tournament order");
  if (S.empty()) throw PreconditionError("module closure needs a nonempty seed");
  return closure_within(t, VertexSet::full(t.order()), S);
}

bool is_indecomposable(const Tournament& t) {
  int n = t.order();
  if (n <= 2) return true;
  VertexSet all = VertexSet::full(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (closure_within(t, all, VertexSet(n, {x, y})) != all) return false;
  return true;
}

namespace {

struct PartitionResult {
  std::vector<VertexSet> parts;
};

// Maximal proper strong modules of t[ground], |ground| >= 2, t[ground]
// decomposable. Candidates are the proper pairwise closures; a module is
// strong exactly when it overlaps none of them.
PartitionResult strong_partition(const Tournament& t, const VertexSet& ground) {
  std::vector<int> verts = ground.elements();
  std::vector<VertexSet> closures;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      VertexSet c =
          closure_within(t, ground, VertexSet(t.order(), {verts[i], verts[j]}));
      if (c != ground && std::find(closures.begin(), closures.end(), c) == closures.end())
        closures.push_back(c);
    }

  std::vector<VertexSet> strong;
  for (const VertexSet& c : closures) {
    bool ok = true;
    for (const VertexSet& d : closures)
      if (c.overlaps(d)) {
        ok = false;
        break;
      }
    if (ok) strong.push_back(c);
  }

  // Largest strong module through each vertex; singletons as fallback.
  PartitionResult out;
  VertexSet covered(t.order());
  for (int v : verts) {
    if (covered.contains(v)) continue;
    const VertexSet* best = nullptr;
    for (const VertexSet& s : strong)
      if (s.contains(v) && (!best || s.count() > best->count())) best = &s;
    VertexSet part = best ? *best : VertexSet(t.order(), {v});
    covered |= part;
    out.parts.push_back(part);
  }
  return out;
}

bool indecomposable_within(const Tournament& t, const VertexSet& ground) {
  std::vector<int> verts = ground.elements();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (closure_within(t, ground, VertexSet(t.order(), {verts[i], verts[j]})) != ground)
        return false;
  return true;
}

MDNode build_tree(const Tournament& t, const VertexSet& ground) {
  MDNode node;
  node.vertices = ground;
  int m = ground.count();
  if (m == 1) {
    node.kind = MDNode::Kind::leaf;
    return node;
  }

  std::vector<VertexSet> parts;
  if (m >= 3 && indecomposable_within(t, ground)) {
    for (int v : ground.elements()) parts.push_back(VertexSet(t.order(), {v}));
    node.kind = MDNode::Kind::prime;
  } else if (m == 2) {
    for (int v : ground.elements()) parts.push_back(VertexSet(t.order(), {v}));
    node.kind = MDNode::Kind::linear;
  } else {
    parts = strong_partition(t, ground).parts;
    // Quotient orientation via representatives; parts are modules, so any
    // representative gives the same answer.
    std::vector<int> reps;
    for (const VertexSet& p : parts) reps.push_back(p.smallest());
    std::vector<int> qdeg(parts.size(), 0);
    bool transitive = true;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (i != j && t.beats(reps[i], reps[j])) ++qdeg[i];
    {
      std::vector<bool> seen(parts.size(), false);
      for (int d : qdeg) {
        if (seen[d]) transitive = false;
        else seen[d] = true;
      }
    }
    node.kind = transitive ? MDNode::Kind::linear : MDNode::Kind::prime;
    if (node.kind == MDNode::Kind::prime) assert(parts.size() >= 3);
  }

  // Child order: chain order for linear nodes (dominating part first),
  // smallest contained vertex for prime nodes.
  if (node.kind == MDNode::Kind::linear) {
    std::stable_sort(parts.begin(), parts.end(), [&](const VertexSet& a, const VertexSet& b) {
      return t.beats(a.smallest(), b.smallest());
    });
  } else {
    std::sort(parts.begin(), parts.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.smallest() < b.smallest(); });
  }

  for (const VertexSet& p : parts) node.children.push_back(build_tree(t, p));
  return node;
}

void collect_modules(const MDNode& node, bool is_root, std::vector<VertexSet>& out) {
  if (!is_root && node.vertices.count() >= 2) out.push_back(node.vertices);
  if (node.kind == MDNode::Kind::linear) {
    int k = static_cast<int>(node.children.size());
    for (int i = 0; i < k; ++i) {
      VertexSet run = node.children[i].vertices;
      for (int j = i + 1; j < k; ++j) {
        run |= node.children[j].vertices;
        if (i == 0 && j == k - 1) continue;  // the node itself
        out.push_back(run);
      }
    }
  }
  for (const MDNode& c : node.children) collect_modules(c, false, out);
}

}  // namespace

MDNode decomposition_tree(const Tournament& t) {
  if (t.order() < 1) throw PreconditionError("decomposition tree needs order >= 1");
  return build_tree(t, VertexSet::full(t.order()));
}

std::vector<VertexSet> all_nontrivial_modules(const Tournament& t) {
  std::vector<VertexSet> out;
  if (t.order() < 3) return out;
  MDNode root = decomposition_tree(t);
  collect_modules(root, true, out);
  std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexSet> twins(const Tournament& t) {
  std::vector<VertexSet> out;
  for (int x = 0; x < t.order(); ++x)
    for (int y = x + 1; y < t.order(); ++y) {
      VertexSet pair(t.order(), {x, y});
      if (is_module(t, pair)) out.push_back(pair);
    }
  return out;
}

std::vector<TransitiveComponent> transitive_components(const Tournament& t) {
  int n = t.order();
  std::vector<TransitiveComponent> out;
  if (n == 0) return out;

  std::vector<VertexSet> candidates;
  for (int v = 0; v < n; ++v) candidates.push_back(VertexSet(n, {v}));
  for (VertexSet& m : all_nontrivial_modules(t)) {
    if (is_transitive(subtournament(t, m).t)) candidates.push_back(std::move(m));
  }
  if (is_transitive(t)) candidates.push_back(VertexSet::full(n));

  for (const VertexSet& c : candidates) {
    bool maximal = true;
    for (const VertexSet& d : candidates)
      if (c != d && c.is_subset_of(d)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;

    TransitiveComponent comp;
    comp.members = c;
    comp.order = c.elements();
    // Transitive order: sort by descending out-degree inside the component.
    std::sort(comp.order.begin(), comp.order.end(), [&](int a, int b) {
      return (t.out_neighbors(a) & c).count() > (t.out_neighbors(b) & c).count();
    });
    out.push_back(std::move(comp));
  }

  std::sort(out.begin(), out.end(), [](const TransitiveComponent& a, const TransitiveComponent& b) {
    return a.members.smallest() < b.members.smallest();
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const TransitiveComponent& a, const TransitiveComponent& b) {
                          return a.members == b.members;
                        }),
            out.end());
  return out;
}

}  // namespace tourney
