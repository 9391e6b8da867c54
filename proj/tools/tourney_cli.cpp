// tourney: analyze tournaments, reverse parts of them, generate the canonical
// families, and run the verification sweeps.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 resource
// cap exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tourney/enumerate.hpp"
#include "tourney/generators.hpp"
#include "tourney/io.hpp"
#include "tourney/sweeps.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

json to_json(const tourney::VertexSet& s) { return json(s.elements()); }

json to_json(const tourney::Arc& a) { return json::array({a.tail, a.head}); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos != token.size()) throw tourney::ValidationError("bad vertex token '" + token + "'");
    out.push_back(v);
  }
  return out;
}

// Arc lists look like "0>1,4>2": tail '>' head, comma separated.
std::vector<tourney::Arc> parse_arc_list(const std::string& text) {
  std::vector<tourney::Arc> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    auto sep = token.find('>');
    if (sep == std::string::npos)
      throw tourney::ValidationError("bad arc token '" + token + "', expected tail>head");
    out.push_back(tourney::Arc{std::stoi(token.substr(0, sep)), std::stoi(token.substr(sep + 1))});
  }
  return out;
}

std::string witness_name(tourney::CoModuleWitness w) {
  switch (w) {
    case tourney::CoModuleWitness::module: return "module";
    case tourney::CoModuleWitness::complement: return "complement";
    case tourney::CoModuleWitness::both: return "both";
  }
  return "?";
}

void print_analysis_text(const tourney::AnalysisReport& rep, std::ostream& out) {
  out << "order: " << rep.order << '\n';
  out << "transitive: " << (rep.transitive ? "yes" : "no") << '\n';
  out << "indecomposable: " << (rep.indecomposable ? "yes" : "no") << '\n';

  out << "transitive components:";
  for (const auto& c : rep.components) {
    out << " [";
    for (std::size_t i = 0; i < c.order.size(); ++i) out << (i ? "," : "") << c.order[i];
    out << ']';
  }
  out << '\n';

  out << "nontrivial modules (" << rep.module_count << "):";
  for (const auto& m : rep.modules) out << ' ' << m.to_string();
  if (rep.modules_truncated) out << " ... (truncated)";
  out << '\n';

  out << "minimal co-modules:";
  for (int i = 0; i < rep.comodules.size(); ++i) {
    const auto& e = rep.comodules.elements[i];
    out << ' ' << e.members.to_string() << '[' << witness_name(e.witness) << ",o="
        << rep.comodules.overlap_degrees[i] << ']';
  }
  out << '\n';

  out << "co-modular index: " << rep.comodular.size << "  matching:";
  for (const auto& m : rep.comodular.matching) out << ' ' << m.to_string();
  out << '\n';
  out << "transversal number: " << rep.transversal.size
      << "  witness: " << rep.transversal.transversal.to_string() << '\n';

  out << "arc index: ";
  if (rep.arc_index_value) {
    out << *rep.arc_index_value;
    if (rep.arc_witness) {
      out << "  witness:";
      for (const auto& a : *rep.arc_witness) out << ' ' << tourney::to_string(a);
    }
  } else {
    out << "impossible";
  }
  out << '\n';

  out << "subtournament index: ";
  if (rep.subtournament_index_value) {
    out << *rep.subtournament_index_value << "  reversal set: "
        << rep.reversal_witness.to_string() << "  method: " << rep.method;
    if (rep.witness_verdict) {
      const auto& v = *rep.witness_verdict;
      out << "  strict transversal: " << (v.is_strict ? "yes" : "no");
    }
  } else {
    out << "impossible";
  }
  out << '\n';
}

json analysis_record(const tourney::AnalysisReport& rep) {
  json j;
  j["record"] = "analysis";
  j["order"] = rep.order;
  j["transitive"] = rep.transitive;
  j["indecomposable"] = rep.indecomposable;
  json comps = json::array();
  for (const auto& c : rep.components) comps.push_back(c.order);
  j["components"] = comps;
  j["module_count"] = rep.module_count;
  json mods = json::array();
  for (const auto& m : rep.modules) mods.push_back(to_json(m));
  j["modules"] = mods;
  j["modules_truncated"] = rep.modules_truncated;
  json family = json::array();
  for (int i = 0; i < rep.comodules.size(); ++i) {
    const auto& e = rep.comodules.elements[i];
    family.push_back({{"members", to_json(e.members)},
                      {"witness", witness_name(e.witness)},
                      {"overlap_degree", rep.comodules.overlap_degrees[i]}});
  }
  j["comodules"] = family;
  j["comodular_index"] = rep.comodular.size;
  json matching = json::array();
  for (const auto& m : rep.comodular.matching) matching.push_back(to_json(m));
  j["matching"] = matching;
  j["transversal_number"] = rep.transversal.size;
  j["transversal_witness"] = to_json(rep.transversal.transversal);
  if (rep.arc_index_value) j["arc_index"] = *rep.arc_index_value;
  else j["arc_index"] = nullptr;
  if (rep.arc_witness) {
    json arcs = json::array();
    for (const auto& a : *rep.arc_witness) arcs.push_back(to_json(a));
    j["arc_witness"] = arcs;
  }
  if (rep.subtournament_index_value) {
    j["subtournament_index"] = *rep.subtournament_index_value;
    j["reversal_witness"] = to_json(rep.reversal_witness);
    j["method"] = rep.method;
    if (rep.witness_verdict) j["witness_is_strict"] = rep.witness_verdict->is_strict;
  } else {
    j["subtournament_index"] = nullptr;
    j["method"] = rep.method;
  }
  return j;
}

int cmd_analyze(const std::string& path, const std::string& format, std::size_t module_cap) {
  tourney::Tournament t = path == "-" ? tourney::read_tournament(std::cin)
                                      : tourney::read_tournament_file(path);
  tourney::AnalysisReport rep = tourney::analyze(t, module_cap);
  if (format == "json") std::cout << analysis_record(rep).dump() << '\n';
  else print_analysis_text(rep, std::cout);
  return kExitOk;
}

int cmd_invert(const std::string& path, const std::optional<std::string>& vertices,
               const std::optional<std::string>& arcs) {
  tourney::Tournament t = path == "-" ? tourney::read_tournament(std::cin)
                                      : tourney::read_tournament_file(path);
  tourney::Tournament result = t;
  if (vertices) {
    tourney::VertexSet x(t.order());
    for (int v : parse_int_list(*vertices)) x.insert(v);
    result = tourney::invert_vertices(t, x);
  } else if (arcs) {
    result = tourney::invert_arcs(t, parse_arc_list(*arcs));
  }
  tourney::write_tournament(std::cout, result);
  return kExitOk;
}

int cmd_generate(const std::string& kind, int n, std::uint64_t seed) {
  tourney::Tournament t = [&] {
    if (kind == "transitive") return tourney::transitive_tournament(n);
    if (kind == "tn") return tourney::tn_family(n);
    if (kind == "fact2") return tourney::fact2_family(n);
    if (kind == "random") return tourney::random_tournament(n, seed);
    throw tourney::ValidationError("unknown generator kind '" + kind + "'");
  }();
  tourney::write_tournament(std::cout, t);
  return kExitOk;
}

int cmd_verify(int n_max, std::vector<std::string> names, bool allow9, bool progress,
               const std::string& format) {
  if (n_max < 1 || n_max > 9 || (n_max == 9 && !allow9))
    throw tourney::CapError("verification sweeps accept --n-max up to 8 "
                            "(9 with --allow-order-9)");

  std::vector<tourney::Sweep> selected;
  if (names.empty()) names.push_back("all");
  for (const std::string& name : names) {
    if (name == "all") {
      selected = tourney::all_sweeps();
      break;
    }
    auto s = tourney::sweep_from_name(name);
    if (!s) throw tourney::ValidationError("unknown sweep '" + name + "'");
    selected.push_back(*s);
  }

  tourney::SweepOptions opts;
  opts.n_max = n_max;
  opts.allow_order_9 = allow9;
  if (progress) {
    opts.progress = [](int order, std::size_t done, std::size_t total) {
      if (done % 64 == 0 || done == total)
        std::cerr << "enumerating order " << order << ": " << done << '/' << total << " parents\r"
                  << (done == total ? "\n" : "") << std::flush;
    };
  }

  auto emit_report = [&](const std::string& name, std::size_t checked,
                         const std::vector<tourney::SweepIssue>& issues) {
    if (format == "json") {
      json j;
      j["record"] = "sweep";
      j["sweep"] = name;
      j["checked"] = checked;
      j["issues"] = issues.size();
      std::cout << j.dump() << '\n';
      for (const auto& issue : issues) {
        json ji;
        ji["record"] = "mismatch";
        ji["sweep"] = name;
        ji["n"] = issue.n;
        ji["source"] = issue.source;
        ji["detail"] = issue.detail;
        std::cout << ji.dump() << '\n';
      }
    } else {
      std::cout << "sweep " << name << ": checked " << checked << ", issues " << issues.size()
                << '\n';
      for (const auto& issue : issues)
        std::cout << "  [" << issue.source << "] " << issue.detail << '\n';
    }
  };

  std::size_t total_issues = 0;
  for (tourney::Sweep sweep : selected) {
    if (sweep == tourney::Sweep::tables) {
      // Run the table computation once and print both verdict and rows.
      if (n_max < 5) {
        emit_report("tables", 0, {});
        continue;
      }
      tourney::EnumerationOptions eo;
      eo.allow_order_9 = allow9;
      eo.progress = opts.progress;
      std::vector<tourney::SweepIssue> issues;
      std::size_t checked = 0;
      std::vector<tourney::TableRow> rows = tourney::verify_tables(n_max, eo);
      for (const auto& row : rows) {
        checked += row.class_count;
        for (const auto& m : row.mismatches) issues.push_back({m.n, m.code_hex, m.detail});
      }
      total_issues += issues.size();
      emit_report("tables", checked, issues);
      for (const auto& row : rows) {
        if (format == "json") {
          json j;
          j["record"] = "table-row";
          j["n"] = row.n;
          j["classes"] = row.class_count;
          j["max_comodular_index"] = row.max_comodular_index;
          j["max_arc_index"] = row.max_arc_index;
          j["max_subtournament_index"] = row.max_subtournament_index;
          std::cout << j.dump() << '\n';
        } else {
          std::cout << "n=" << row.n << " classes=" << row.class_count
                    << " max_comodular=" << row.max_comodular_index
                    << " max_arc=" << row.max_arc_index
                    << " max_subtournament=" << row.max_subtournament_index << '\n';
        }
      }
      continue;
    }
    tourney::SweepReport report = tourney::run_sweep(sweep, opts);
    total_issues += report.issues.size();
    emit_report(sweep_name(sweep), report.checked, report.issues);
  }

  return total_issues == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament decomposability toolkit"};
  app.require_subcommand(1);

  if (const char* cap = std::getenv("TOURNEY_MAX_ORDER")) {
    try {
      tourney::set_max_order(std::stoi(cap));
    } catch (const std::exception&) {
      std::cerr << "bad TOURNEY_MAX_ORDER value, keeping default\n";
    }
  }

  std::string file, format = "text";
  std::size_t module_cap = 200;
  auto* analyze = app.add_subcommand("analyze", "full structural report for one tournament");
  analyze->add_option("file", file, "tournament file, or - for stdin")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--module-cap", module_cap, "cap on listed modules");

  std::optional<std::string> vertices_opt, arcs_opt;
  auto* invert = app.add_subcommand("invert", "reverse a vertex set or an arc set");
  invert->add_option("file", file, "tournament file, or - for stdin")->required();
  auto* vopt = invert->add_option("--vertices", vertices_opt, "comma list, e.g. 0,2,4")
                   ->expected(0, 1);
  invert->add_option("--arcs", arcs_opt, "comma list of tail>head, e.g. 0>1,4>2")
      ->expected(0, 1)
      ->excludes(vopt);

  std::string kind;
  int gen_n = 0;
  std::uint64_t seed = 0;
  auto* generate = app.add_subcommand("generate", "emit a tournament from a named family");
  generate->add_option("kind", kind, "transitive | tn | fact2 | random")->required();
  generate->add_option("n", gen_n, "order")->required();
  generate->add_option("--seed", seed, "seed for kind=random");

  int n_max = 6;
  bool allow9 = false, progress = false;
  std::vector<std::string> theorem_names;
  auto* verify = app.add_subcommand("verify", "run verification sweeps over all classes");
  verify->add_option("--n-max", n_max, "exhaust isomorphism classes up to this order");
  verify->add_option("--theorems", theorem_names,
                     "comma list: theorem3,theorem6,theorem8,theorem9,koenig,tables or all")
      ->delimiter(',');
  verify->add_flag("--allow-order-9", allow9, "permit the order-9 enumeration (minutes)");
  verify->add_flag("--progress", progress, "report enumeration progress on stderr");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(file, format, module_cap);
    if (*invert) return cmd_invert(file, vertices_opt, arcs_opt);
    if (*generate) return cmd_generate(kind, gen_n, seed);
    if (*verify) return cmd_verify(n_max, theorem_names, allow9, progress, format);
  } catch (const tourney::CapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const tourney::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
