#include "tourney/io.hpp"

#include <fstream>
#include <sstream>

namespace tourney {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next significant line: comments skipped, trailing CR stripped.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& what, int column = 0) const {
    std::string where = "line " + std::to_string(line_no);
    if (column > 0) where += ", column " + std::to_string(column);
    throw ValidationError(what + " (" + where + ")");
  }
};

}  // namespace

Tournament read_tournament(std::istream& in) {
  LineReader reader{in};

  auto header = reader.next();
  if (!header) reader.fail("missing order line");
  int n = 0;
  {
    std::istringstream is(*header);
    if (!(is >> n) || n < 0) reader.fail("order line must hold a nonnegative integer");
    std::string rest;
    if (is >> rest) reader.fail("trailing content after the order");
  }

  std::vector<std::string> rows;
  for (int i = 0; i < n; ++i) {
    auto row = reader.next();
    if (!row) reader.fail("expected " + std::to_string(n) + " matrix rows, got " +
                          std::to_string(i));
    if (static_cast<int>(row->size()) != n)
      reader.fail("row " + std::to_string(i) + " has length " + std::to_string(row->size()) +
                      ", expected " + std::to_string(n),
                  static_cast<int>(row->size()) + 1);
    for (int j = 0; j < n; ++j)
      if ((*row)[j] != '0' && (*row)[j] != '1')
        reader.fail("matrix entries must be 0 or 1", j + 1);
    rows.push_back(*row);
  }

  Tournament::Builder b(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i][i] != '0')
      throw ValidationError("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                            ") must be 0");
    for (int j = i + 1; j < n; ++j) {
      bool fwd = rows[i][j] == '1';
      bool bwd = rows[j][i] == '1';
      if (fwd == bwd)
        throw ValidationError("pair {" + std::to_string(i) + "," + std::to_string(j) +
                              "} must be oriented exactly one way");
      fwd ? b.orient(i, j) : b.orient(j, i);
    }
  }
  return b.build();
}

Tournament read_tournament_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return read_tournament(in);
}

Tournament parse_tournament(const std::string& text) {
  std::istringstream in(text);
  return read_tournament(in);
}

void write_tournament(std::ostream& out, const Tournament& t) {
  const int n = t.order();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (i != j && t.beats(i, j) ? '1' : '0');
    out << '\n';
  }
}

std::string to_file_string(const Tournament& t) {
  std::ostringstream os;
  write_tournament(os, t);
  return os.str();
}

std::string method_name(IndexMethod m) {
  switch (m) {
    case IndexMethod::indecomposable_input: return "indecomposable-input";
    case IndexMethod::construction: return "construction";
    case IndexMethod::pair_search: return "pair-search";
    case IndexMethod::brute_force: return "brute-force";
  }
  return "?";
}

AnalysisReport analyze(const Tournament& t, std::size_t module_cap) {
  AnalysisReport rep;
  rep.order = t.order();
  rep.transitive = is_transitive(t);
  rep.indecomposable = is_indecomposable(t);
  rep.components = transitive_components(t);

  std::vector<VertexSet> modules = all_nontrivial_modules(t);
  rep.module_count = modules.size();
  if (modules.size() > module_cap) {
    modules.resize(module_cap);
    rep.modules_truncated = true;
  }
  rep.modules = std::move(modules);

  rep.comodules = minimal_comodules(t);
  rep.comodular = comodular_index(t);
  rep.transversal = transversal_number(t);
  rep.reversal_witness = VertexSet(t.order());

  if (t.order() >= 5) {
    IndexReport idx = subtournament_index(t);
    rep.subtournament_index_value = idx.subtournament_index;
    rep.reversal_witness = idx.witness_vertices;
    rep.method = method_name(idx.method);
    if (!idx.subtournament_index.has_value()) rep.method = "impossible";
    // Witness search is exhaustive; past a couple dozen vertices the budget
    // cannot reach anything, so do not burn it.
    ArcIndexResult arc = arc_index(t, /*want_witness=*/t.order() <= 20, /*budget=*/200'000);
    rep.arc_index_value = arc.value;
    rep.arc_witness = arc.witness;
  } else {
    BruteForceIndex idx = brute_subtournament_index(t);
    rep.subtournament_index_value = idx.value;
    rep.reversal_witness = idx.witness;
    rep.method = idx.value.has_value() ? "brute-force" : "impossible";
    rep.arc_index_value = brute_arc_index(t);
  }

  if (rep.subtournament_index_value.has_value())
    rep.witness_verdict = classify_transversal(t, rep.reversal_witness);
  return rep;
}

}  // namespace tourney
