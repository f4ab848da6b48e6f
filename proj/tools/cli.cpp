#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "turan/turan.hpp"

namespace turan::cli {
namespace {

using json = nlohmann::ordered_json;

// Bad flag values found after parsing; reported like any usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFormats{"human", "json-lines"};

PathForest forest_flag(const std::string& text) {
  try {
    return PathForest::parse(text);
  } catch (const ArgumentError& e) {
    throw UsageError(std::string("--forest: ") + e.what());
  }
}

bool is_json(const std::string& format) { return format == "json-lines"; }

json witness_json(const Witness& w) {
  json paths = json::array();
  for (const auto& p : w.paths) paths.push_back(p);
  return paths;
}

json terms_json(const TuranValue& v) {
  json terms = json::array();
  for (const Term& t : v.terms) terms.push_back({{"label", t.label}, {"value", t.value}});
  return terms;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// ex

struct ExArgs {
  long long n = 0;
  std::string forest;
  std::string mode = "auto";
  std::string format = "human";
};

int cmd_ex(const ExArgs& a, std::ostream& out) {
  const PathForest f = forest_flag(a.forest);
  std::string source = a.mode;
  if (source == "auto") {
    if (f.size() == 1)
      source = "path";
    else if (f == PathForest{7, 7})
      source = "2p7";
    else if (f.smallest() >= 3 && f.odd_count() <= 1 && a.n >= f.total())
      source = "proved";
    else
      source = "conjecture";
  }

  TuranValue v;
  if (source == "path") {
    if (f.size() != 1) throw UsageError("--mode path needs a single path order");
    v = ex_path(a.n, f[0]);
  } else if (source == "2p7") {
    if (!(f == PathForest{7, 7})) throw UsageError("--mode 2p7 needs --forest 7,7");
    v = ex_2p7(a.n);
  } else if (source == "proved") {
    v = ex_forest(a.n, f, ForestMode::proved);
  } else {
    v = ex_forest(a.n, f, ForestMode::conjecture);
  }

  if (is_json(a.format)) {
    json j{{"n", a.n},         {"forest", f.to_string()}, {"source", source},
           {"value", v.value}, {"argmax", v.argmax},      {"tie", v.tie},
           {"conjectural", v.conjectural}, {"terms", terms_json(v)}};
    out << j.dump() << '\n';
    return kOk;
  }
  out << "ex(" << a.n << "; " << f.to_string() << ") = " << v.value << "  [" << v.argmax;
  if (v.tie) out << ", tie";
  out << "]";
  if (v.conjectural) out << "  (conjectural)";
  out << '\n';
  for (const Term& t : v.terms) out << "  " << t.label << " = " << t.value << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string family;
  long long n = -1;
  long long k = -1;
  long long s = 0;
  std::string forest;
  std::string format = "graph6";
};

std::vector<Construction> build_family(const ConstructArgs& a) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw UsageError(what);
  };
  need(a.n >= 0, "construct needs --n");
  const std::string& fam = a.family;
  if (fam == "2p7") return extremal_2p7(a.n);
  if (fam == "conjecture") {
    need(!a.forest.empty(), "--family conjecture needs --forest");
    return conjecture_family(a.n, forest_flag(a.forest));
  }
  need(a.k >= 0, "this family needs --k");
  if (fam == "path-cliques") return {extremal_path_cliques(a.n, a.k)};
  if (fam == "path-special") return {extremal_path_special(a.n, a.k, a.s)};
  if (fam == "path-family") return extremal_path_family(a.n, a.k);
  if (fam == "kopylov-a") return {kopylov_A(a.n, a.k)};
  return {kopylov_B(a.n, a.k)};
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<Construction> graphs = build_family(a);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Construction& c = graphs[i];
    err << c.name << ": " << c.graph.order() << " vertices, " << c.graph.edge_count()
        << " edges\n";
    if (a.format == "graph6") {
      out << write_graph6(c.graph) << '\n';
    } else if (a.format == "edgelist") {
      if (i) out << '\n';
      out << "# " << c.name << '\n';
      write_edge_list(out, c.graph);
    } else if (a.format == "dot") {
      out << "// " << c.name << '\n';
      write_dot(out, c.graph, "g" + std::to_string(i));
    } else {
      json j{{"family", a.family},
             {"name", c.name},
             {"n", c.graph.order()},
             {"edges", c.graph.edge_count()},
             {"predicted", c.predicted_edges},
             {"graph6", write_graph6(c.graph)}};
      out << j.dump() << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string input;
  std::string forest;
  bool witness = false;
  std::string format_in = "auto";
  std::string format = "human";
  std::string expect;
};

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

std::string input_format(const CheckArgs& a) {
  if (a.format_in != "auto") return a.format_in;
  for (const char* ext : {".el", ".edges", ".edgelist", ".txt"})
    if (ends_with(a.input, ext)) return "edgelist";
  return "graph6";
}

std::vector<Graph> read_graphs(std::istream& in, const std::string& format) {
  if (format == "edgelist") return {read_edge_list(in)};
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line.erase(0, header.size());
    if (line.empty() || line == "\r") continue;
    try {
      out.push_back(read_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const PathForest f = forest_flag(a.forest);
  std::vector<Graph> graphs;
  if (a.input == "-") {
    graphs = read_graphs(std::cin, input_format(a));
  } else {
    std::ifstream file(a.input);
    if (!file) throw DomainError("cannot open " + a.input);
    graphs = read_graphs(file, input_format(a));
  }
  if (graphs.empty()) throw DomainError("no graph in " + a.input);

  int status = kOk;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const ContainResult r = contains_forest(g, f);
    err << "graph " << i << ": " << r.nodes << " search nodes\n";
    if (!a.expect.empty() && (a.expect == "contains") != r.contains) {
      err << "graph " << i << ": expected " << a.expect << '\n';
      status = kFinding;
    }
    if (is_json(a.format)) {
      json j{{"index", i},
             {"order", g.order()},
             {"edges", g.edge_count()},
             {"forest", f.to_string()},
             {"contains", r.contains}};
      if (a.witness && r.witness) j["witness"] = witness_json(*r.witness);
      out << j.dump() << '\n';
      continue;
    }
    if (graphs.size() > 1) out << "graph " << i << ": ";
    out << (r.contains ? "contains" : "free") << '\n';
    if (a.witness && r.witness) write_witness(out, *r.witness);
  }
  return status;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  int n = 0;
  std::string forest;
  bool allow_long = false;
  unsigned threads = 1;
  std::string dump;
  bool no_seed = false;
  std::string format = "human";
};

// The closed form that claims to give ex(n, F), when one applies.
std::optional<TuranValue> formula_for(int n, const PathForest& f) {
  if (f.size() == 1) return ex_path(n, f[0]);
  if (f.smallest() >= 3 && f.odd_count() <= 1 && n >= f.total())
    return ex_forest(n, f, ForestMode::proved);
  return std::nullopt;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const PathForest f = forest_flag(a.forest);
  if (a.threads < 1) throw UsageError("--threads must be at least 1");
  OracleOptions opts;
  opts.allow_long = a.allow_long;
  opts.threads = a.threads;
  opts.seed_with_construction = !a.no_seed;
  opts.collect_all = !a.dump.empty();

  err << "oracle: n = " << a.n << ", forest " << f.to_string() << ", " << a.threads
      << " worker(s)\n";
  Stopwatch clock;
  const OracleResult r = oracle_ex(a.n, f, opts);
  err << "oracle: " << r.graphs_enumerated << " classes, " << r.graphs_checked
      << " searched, seed " << (r.seed.empty() ? "none" : r.seed) << ", " << std::fixed
      << std::setprecision(2) << clock.seconds() << " s\n";

  if (!a.dump.empty()) {
    std::ofstream file(a.dump);
    if (!file) throw DomainError("cannot write " + a.dump);
    for (const Graph& g : r.extremal) file << write_graph6(g) << '\n';
    err << "oracle: " << r.extremal.size() << " extremal classes written to " << a.dump << '\n';
  }

  const auto formula = formula_for(a.n, f);
  const bool agree = !formula || formula->value == r.value;
  if (is_json(a.format)) {
    json j{{"n", a.n},
           {"forest", f.to_string()},
           {"value", r.value},
           {"witness", write_graph6(r.witness)},
           {"graphs_enumerated", r.graphs_enumerated}};
    if (formula) {
      j["formula"] = formula->value;
      j["formula_label"] = formula->argmax;
      j["agree"] = agree;
    }
    out << j.dump() << '\n';
  } else {
    out << "ex(" << a.n << "; " << f.to_string() << ") = " << r.value << '\n';
    out << "witness " << write_graph6(r.witness) << '\n';
    out << "classes " << r.graphs_enumerated << '\n';
    if (formula)
      out << "formula " << formula->value << " [" << formula->argmax << "] "
          << (agree ? "agrees" : "DISAGREES") << '\n';
  }
  return agree ? kOk : kFinding;
}

// ---------------------------------------------------------------------------
// verify-facts

struct FactsArgs {
  std::string fact = "all";
  bool witness = false;
  std::string format = "human";
};

std::vector<std::vector<std::string>> named_witness(const Witness& w) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : w.paths) {
    out.emplace_back();
    for (int v : p) out.back().push_back(factcheck::vertex_name(v));
  }
  return out;
}

json report_json(const factcheck::FactReport& r, bool with_witness) {
  static const char* kinds[] = {"isolated", "pendant", "path3"};
  json claims = json::array();
  for (const auto& c : r.claims) {
    json edges = json::array();
    for (Edge e : c.edges) edges.push_back(factcheck::edge_name(e));
    json jc{{"edges", edges}, {"verified", c.verified}};
    if (with_witness && c.witness) jc["witness"] = named_witness(*c.witness);
    if (!c.note.empty()) jc["note"] = c.note;
    claims.push_back(jc);
  }
  json j{{"fact", r.fact_id},
         {"attachment", kinds[static_cast<int>(r.config.kind)]},
         {"hits", r.config.hits},
         {"case", r.case_label},
         {"base_free", r.base_free},
         {"claims", claims}};
  if (r.derived_bound) j["derived_bound"] = *r.derived_bound;
  if (r.case_constant) j["case_constant"] = *r.case_constant;
  if (r.stated_constant) j["stated_constant"] = *r.stated_constant;
  j["status"] = factcheck::to_string(r.status);
  return j;
}

void report_human(std::ostream& out, const factcheck::FactReport& r, bool with_witness) {
  int verified = 0;
  for (const auto& c : r.claims) verified += c.verified;
  out << r.fact_id << " | " << r.config.describe() << " | " << r.case_label << " | claims "
      << verified << "/" << r.claims.size() << " (" << r.singleton_count() << " misses, "
      << r.pair_count() << " pairs)";
  if (!r.base_free) out << " | base contains 2P7";
  if (r.derived_bound)
    out << " | bound " << *r.derived_bound << " (case " << *r.case_constant << ", stated "
        << *r.stated_constant << ")";
  out << " | " << factcheck::to_string(r.status) << '\n';
  for (const auto& c : r.claims) {
    if (c.verified && !with_witness) continue;
    out << "    ";
    for (std::size_t i = 0; i < c.edges.size(); ++i)
      out << (i ? " & " : "") << factcheck::edge_name(c.edges[i]);
    if (!c.verified) out << "  NOT VERIFIED " << c.note;
    if (c.witness)
      for (const auto& p : named_witness(*c.witness)) {
        out << "  [";
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << "]";
      }
    out << '\n';
  }
}

int cmd_facts(const FactsArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, std::vector<factcheck::FactReport>>> groups;
  auto add_fact = [&](int f) { groups.emplace_back("fact " + std::to_string(f), factcheck::verify_fact(f)); };
  Stopwatch clock;
  if (a.fact == "all" || a.fact == "rules") groups.emplace_back("rules", factcheck::verify_rules());
  if (a.fact == "all")
    for (int f = 1; f <= 7; ++f) add_fact(f);
  else if (a.fact != "rules")
    add_fact(std::stoi(a.fact));

  bool all_pass = true;
  for (const auto& [name, reports] : groups) {
    int checks = 0;
    bool pass = true;
    for (const auto& r : reports) {
      checks += static_cast<int>(r.claims.size());
      pass = pass && r.passed();
      if (is_json(a.format))
        out << report_json(r, a.witness).dump() << '\n';
      else
        report_human(out, r, a.witness);
    }
    all_pass = all_pass && pass;
    if (is_json(a.format)) continue;
    out << "== " << name << ": " << reports.size() << " configuration(s), " << checks
        << " claim checks";
    if (name != "rules") {
      out << ", worst bound " << factcheck::worst_bound(reports);
      if (!reports.empty() && reports.front().stated_constant)
        out << " (stated " << *reports.front().stated_constant << ")";
    }
    out << ": " << (pass ? "PASS" : "FAIL") << '\n';
  }
  err << "verify-facts: " << std::fixed << std::setprecision(3) << clock.seconds() << " s\n";
  return all_pass ? kOk : kFinding;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  long long from = 14;
  long long to = 40;
  std::string format = "human";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  if (a.from > a.to) throw UsageError("--from must not exceed --to");
  if (!is_json(a.format))
    out << std::setw(5) << "n" << std::setw(10) << "[n,14,7]" << std::setw(8) << "5n-14"
        << std::setw(8) << "max" << "  argmax\n";
  for (long long n = a.from; n <= a.to; ++n) {
    const TuranValue v = ex_2p7(n);
    const std::string arg = v.tie ? "tie" : v.argmax;
    if (is_json(a.format)) {
      out << json{{"n", n},
                  {"bracket", v.terms[0].value},
                  {"linear", v.terms[1].value},
                  {"max", v.value},
                  {"argmax", arg}}
                 .dump()
          << '\n';
    } else {
      out << std::setw(5) << n << std::setw(10) << v.terms[0].value << std::setw(8)
          << v.terms[1].value << std::setw(8) << v.value << "  " << arg << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turan numbers of linear forests", "turan"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto format_opt = [](CLI::App* sub, std::string& target) {
    sub->add_option("--format", target, "human | json-lines")
        ->check(CLI::IsMember(kFormats));
  };

  ExArgs ex;
  auto* ex_cmd = app.add_subcommand("ex", "closed-form Turan value");
  ex_cmd->add_option("--n", ex.n, "number of vertices")->required()->check(CLI::NonNegativeNumber);
  ex_cmd->add_option("--forest", ex.forest, "path orders, e.g. 7,7")->required();
  ex_cmd->add_option("--mode", ex.mode, "auto | path | 2p7 | proved | conjecture")
      ->check(CLI::IsMember({"auto", "path", "2p7", "proved", "conjecture"}));
  format_opt(ex_cmd, ex.format);

  ConstructArgs con;
  auto* con_cmd = app.add_subcommand("construct", "build an extremal graph family");
  con_cmd->add_option("--family", con.family)
      ->required()
      ->check(CLI::IsMember({"2p7", "path-cliques", "path-special", "path-family", "kopylov-a",
                             "kopylov-b", "conjecture"}));
  con_cmd->add_option("--n", con.n)->required()->check(CLI::NonNegativeNumber);
  con_cmd->add_option("--k", con.k, "path order");
  con_cmd->add_option("--s", con.s, "index of the special family member");
  con_cmd->add_option("--forest", con.forest);
  con_cmd->add_option("--format", con.format, "graph6 | edgelist | dot | json-lines")
      ->check(CLI::IsMember({"graph6", "edgelist", "dot", "json-lines"}));

  CheckArgs chk;
  auto* chk_cmd = app.add_subcommand("check", "test graphs for a path forest");
  chk_cmd->add_option("--input", chk.input, "graph file, '-' for stdin")->required();
  chk_cmd->add_option("--forest", chk.forest)->required();
  chk_cmd->add_flag("--witness", chk.witness, "print the embedding");
  chk_cmd->add_option("--format-in", chk.format_in)
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  chk_cmd->add_option("--expect", chk.expect, "free | contains; mismatch exits 2")
      ->check(CLI::IsMember({"free", "contains"}));
  format_opt(chk_cmd, chk.format);

  OracleArgs ora;
  auto* ora_cmd = app.add_subcommand("oracle", "exact ex(n, F) by exhaustive search");
  ora_cmd->add_option("--n", ora.n)->required()->check(CLI::PositiveNumber);
  ora_cmd->add_option("--forest", ora.forest)->required();
  ora_cmd->add_flag("--allow-long", ora.allow_long, "permit n = 10");
  ora_cmd->add_option("--threads", ora.threads, "worker count");
  ora_cmd->add_option("--dump", ora.dump, "write every extremal class (graph6) here");
  ora_cmd->add_flag("--no-seed", ora.no_seed, "start from an empty incumbent");
  format_opt(ora_cmd, ora.format);

  FactsArgs fac;
  auto* fac_cmd = app.add_subcommand("verify-facts", "replay the spine case analysis");
  fac_cmd->add_option("--fact", fac.fact, "all | rules | 1..7")
      ->check(CLI::IsMember({"all", "rules", "1", "2", "3", "4", "5", "6", "7"}));
  fac_cmd->add_flag("--witness", fac.witness, "print every embedding");
  format_opt(fac_cmd, fac.format);

  TableArgs tab;
  auto* tab_cmd = app.add_subcommand("table", "ex(n, 2P7) branch table");
  tab_cmd->add_option("--from", tab.from);
  tab_cmd->add_option("--to", tab.to);
  format_opt(tab_cmd, tab.format);

  std::vector<const char*> argv{"turan"};
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "turan: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*ex_cmd) return cmd_ex(ex, out);
    if (*con_cmd) return cmd_construct(con, out, err);
    if (*chk_cmd) return cmd_check(chk, out, err);
    if (*ora_cmd) return cmd_oracle(ora, out, err);
    if (*fac_cmd) return cmd_facts(fac, out, err);
    if (*tab_cmd) return cmd_table(tab, out);
  } catch (const UsageError& e) {
    err << "turan: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalInconsistency& e) {
    err << "turan: verification failure: " << e.what() << '\n';
    return kFinding;
  } catch (const std::exception& e) {
    err << "turan: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsage;
}

}  // namespace turan::cli
