#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tourney/comodules.hpp"
#include "tourney/core.hpp"
#include "tourney/indices.hpp"
#include "tourney/modules.hpp"
#include "tourney/transversal.hpp"

namespace tourney {

// Text format for a single tournament:
//   line 1: the order n
//   lines 2..n+1: n characters over {0,1}; row i, column j is 1 iff i beats j
// The diagonal must be 0 and the matrix antisymmetric. Lines starting with
// '#' are comments and may appear anywhere. Parse errors carry line/column.
Tournament read_tournament(std::istream& in);
Tournament read_tournament_file(const std::string& path);
Tournament parse_tournament(const std::string& text);

void write_tournament(std::ostream& out, const Tournament& t);
std::string to_file_string(const Tournament& t);

// Everything the analyzer knows about one tournament. Rendering (text or
// line-delimited records) lives in the command-line tool.
struct AnalysisReport {
  int order = 0;
  bool transitive = false;
  bool indecomposable = false;
  std::vector<TransitiveComponent> components;
  std::size_t module_count = 0;
  std::vector<VertexSet> modules;  // listing capped, see modules_truncated
  bool modules_truncated = false;
  CoModuleFamily comodules;
  MatchingResult comodular;             // index with witness matching
  TransversalNumberResult transversal;  // number with witness
  std::optional<int> arc_index_value;   // nullopt: no arc set works (order <= 4)
  std::optional<std::vector<Arc>> arc_witness;
  std::optional<int> subtournament_index_value;  // nullopt: no reversal set exists
  VertexSet reversal_witness;
  std::optional<TransversalReport> witness_verdict;
  std::string method;
};

AnalysisReport analyze(const Tournament& t, std::size_t module_cap = 200);

std::string method_name(IndexMethod m);

}  // namespace tourney
