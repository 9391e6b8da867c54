#include "tourney/core.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <sstream>

namespace tourney {

namespace {
std::atomic<int>& max_order_slot() {
  static std::atomic<int> value{kDefaultMaxOrder};
  return value;
}

int words_for(int universe) { return (universe + 63) / 64; }
}  // namespace

int max_order() { return max_order_slot().load(); }

void set_max_order(int n) {
  if (n < 0) throw ValidationError("max order must be nonnegative");
  max_order_slot().store(n);
}

std::string to_string(const Arc& a) {
  std::ostringstream os;
  os << '(' << a.tail << ',' << a.head << ')';
  return os.str();
}

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw ValidationError("vertex set universe must be nonnegative");
  words_.assign(words_for(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> vertices) : VertexSet(universe) {
  for (int v : vertices) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<int>& vertices) : VertexSet(universe) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() &= (1ULL << (universe % 64)) - 1;
  return s;
}

void VertexSet::check_vertex(int v) const {
  if (v < 0 || v >= universe_)
    throw ValidationError("vertex " + std::to_string(v) + " outside universe 0.." +
                          std::to_string(universe_ - 1));
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (universe_ != o.universe_)
    throw PreconditionError("vertex sets belong to different universes (" +
                            std::to_string(universe_) + " vs " + std::to_string(o.universe_) + ")");
}

int VertexSet::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::contains(int v) const {
  check_vertex(v);
  return (words_[v >> 6] >> (v & 63)) & 1ULL;
}

void VertexSet::insert(int v) {
  check_vertex(v);
  words_[v >> 6] |= 1ULL << (v & 63);
}

void VertexSet::erase(int v) {
  check_vertex(v);
  words_[v >> 6] &= ~(1ULL << (v & 63));
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::overlaps(const VertexSet& o) const {
  return intersects(o) && !is_subset_of(o) && !o.is_subset_of(*this);
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<int>(i) * 64 + b);
      w &= w - 1;
    }
  }
  return out;
}

int VertexSet::smallest() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i) * 64 + std::countr_zero(words_[i]);
  return -1;
}

bool VertexSet::size_lex_less(const VertexSet& a, const VertexSet& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.elements() < b.elements();
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : elements()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Tournament::Builder::Builder(int n) : n_(n) {
  if (n < 0) throw ValidationError("tournament order must be nonnegative");
  if (n > max_order())
    throw CapError("tournament order " + std::to_string(n) + " exceeds cap " +
                   std::to_string(max_order()));
  beats_.assign(n, VertexSet(n));
  decided_.assign(n, VertexSet(n));
}

void Tournament::Builder::orient(int x, int y) {
  if (x == y) throw ValidationError("self-loop at vertex " + std::to_string(x));
  if (x < 0 || x >= n_ || y < 0 || y >= n_)
    throw ValidationError("arc " + tourney::to_string(Arc{x, y}) + " outside vertex range 0.." +
                          std::to_string(n_ - 1));
  beats_[x].insert(y);
  beats_[y].erase(x);
  decided_[x].insert(y);
  decided_[y].insert(x);
}

bool Tournament::Builder::oriented(int x, int y) const { return decided_[x].contains(y); }

Tournament Tournament::Builder::build() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (!decided_[x].contains(y))
        throw ValidationError("missing orientation for pair {" + std::to_string(x) + "," +
                              std::to_string(y) + "}");
  return Tournament(n_, beats_);
}

Tournament::Tournament(int n, std::vector<VertexSet> rows) : n_(n), rows_(std::move(rows)) {}

bool Tournament::beats(int x, int y) const {
  assert(x != y);
  return rows_[x].contains(y);
}

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int x = 0; x < n_; ++x)
    for (int y : rows_[x].elements()) out.push_back(Arc{x, y});
  return out;
}

Tournament make_tournament(int n, const std::vector<Arc>& arcs) {
  Tournament::Builder b(n);
  for (const Arc& a : arcs) {
    if (a.tail != a.head && a.tail >= 0 && a.tail < n && a.head >= 0 && a.head < n &&
        b.oriented(a.tail, a.head))
      throw ValidationError("duplicate or contradictory pair " + to_string(a));
    b.orient(a.tail, a.head);
  }
  return b.build();
}

Tournament invert_arcs(const Tournament& t, const std::vector<Arc>& B) {
  Tournament out = t;
  for (const Arc& a : B) {
    if (a.tail == a.head || a.tail < 0 || a.tail >= t.order() || a.head < 0 ||
        a.head >= t.order() || !t.beats(a.tail, a.head))
      throw ValidationError("not an arc of the tournament: " + to_string(a));
    out.rows_[a.tail].erase(a.head);
    out.rows_[a.head].insert(a.tail);
  }
  return out;
}

Tournament invert_vertices(const Tournament& t, const VertexSet& X) {
  if (X.universe() != t.order())
    throw PreconditionError("vertex set universe does not match tournament order");
  Tournament out = t;
  // Inside X every pair flips: the out-row of each member is xored against
  // the other members.
  for (int x : X.elements()) {
    VertexSet others = X;
    others.erase(x);
    out.rows_[x] = (out.rows_[x] - others) | (others - out.rows_[x]);
  }
  return out;
}

Tournament dual(const Tournament& t) { return invert_vertices(t, VertexSet::full(t.order())); }

InducedSubtournament subtournament(const Tournament& t, const VertexSet& W) {
  if (W.universe() != t.order())
    throw PreconditionError("vertex set universe does not match tournament order");
  std::vector<int> verts = W.elements();
  int m = static_cast<int>(verts.size());
  Tournament::Builder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      t.beats(verts[i], verts[j]) ? b.orient(i, j) : b.orient(j, i);
  return InducedSubtournament{b.build(), std::move(verts)};
}

bool is_transitive(const Tournament& t) {
  std::vector<bool> seen(t.order(), false);
  for (int x = 0; x < t.order(); ++x) {
    int d = t.out_degree(x);
    if (seen[d]) return false;
    seen[d] = true;
  }
  return true;
}

bool is_transitive_of_even_order(const Tournament& t) {
  return t.order() % 2 == 0 && is_transitive(t);
}

}  // namespace tourney
