// singturan: constructions, checks, exact solvers and comparison tables.
//
// Exit codes: 0 ok / free / valid, 1 witness found or mismatch, 2 input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "singturan/catalog.hpp"
#include "singturan/constructions.hpp"
#include "singturan/formulas.hpp"
#include "singturan/graph6.hpp"
#include "singturan/oracle.hpp"
#include "singturan/singular.hpp"
#include "singturan/worm.hpp"

using namespace singturan;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitWitness = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

PatternGraph resolve_pattern(const std::string& name, const std::string& g6) {
  if (!g6.empty()) return PatternGraph(parse_graph6(g6), g6);
  if (name.empty()) throw InputError("give --pattern or --pattern-g6");
  return PatternGraph::named(name);
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)); }

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
  std::string name;
  ConstructionParams params;
  int n = -1, r = -1, g = -1, a = -1, k = -1;
  std::string pattern;
  std::string format = "graph6";
  bool verify = false;
  std::string out;
};

int run_construct(ConstructArgs& c) {
  auto opt = [](int v) { return v < 0 ? std::nullopt : std::optional<int>(v); };
  c.params.n = opt(c.n);
  c.params.r = opt(c.r);
  c.params.g = opt(c.g);
  c.params.a = opt(c.a);
  c.params.k = opt(c.k);
  if (!c.pattern.empty()) c.params.pattern = c.pattern;
  const BuiltConstruction built = build_construction(c.name, c.params);
  std::optional<VerifyReport> report;
  if (c.verify) report = built.verify();

  if (c.format == "graph6") {
    write_out(to_graph6(built.graph) + "\n", c.out);
  } else if (c.format == "dot") {
    std::string id = c.name;
    for (char& ch : id)
      if (ch == '-') ch = '_';
    write_out(to_dot(built.graph, id), c.out);
  } else {
    json j = json::parse(to_json(built.graph));
    j["schema"] = 1;
    j["name"] = built.name;
    j["graph6"] = to_graph6(built.graph);
    j["edge_count"] = built.graph.edge_count();
    j["predicted_edges"] = built.predicted_edges;
    if (built.coloring) j["coloring"] = built.coloring->colors();
    if (report) j["verify"] = json::parse(report->to_json());
    write_out(j.dump() + "\n", c.out);
  }
  if (report && c.format != "json") std::cerr << report->to_json() << "\n";
  return report && !report->pass() ? kExitWitness : kExitOk;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
  std::string graph;
  std::string pattern;
  std::string pattern_g6;
  std::string coloring;
};

int run_check(const CheckArgs& c) {
  std::string text = c.graph;
  if (text == "-") std::getline(std::cin, text);
  const Graph g = parse_graph6(text);
  const PatternGraph h = resolve_pattern(c.pattern, c.pattern_g6);
  json j;
  j["schema"] = 1;
  j["pattern"] = h.name();
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  bool ok = false;
  if (c.coloring.empty()) {
    j["check"] = "singular";
    const auto w = find_singular_copy(g, h);
    ok = !w;
    j["witness"] = w ? json{{"kind", to_string(w->mode)}, {"vertices", w->vertices}, {"degrees", w->degrees}}
                     : json(nullptr);
  } else {
    j["check"] = "worm";
    const Coloring col = Coloring::from_json(read_file(c.coloring));
    const auto v = check_worm(g, h, col);
    ok = !v;
    j["witness"] = v ? json{{"kind", to_string(v->kind)}, {"vertices", v->vertices}} : json(nullptr);
  }
  j["ok"] = ok;
  std::cout << j.dump() << "\n";
  return ok ? kExitOk : kExitWitness;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string problem;
  int n = 0;
  std::string pattern;
  std::string pattern_g6;
  int workers = 1;
  std::string mode = "isomorph-free";
};

GenMode mode_of(const std::string& m) { return m == "labeled" ? GenMode::Labeled : GenMode::IsomorphFree; }

int run_solve(const SolveArgs& s) {
  const PatternGraph h = resolve_pattern(s.pattern, s.pattern_g6);
  GenOptions opts;
  opts.workers = s.workers;
  opts.mode = mode_of(s.mode);
  const ExactResult res = exact_solve(problem_from_string(s.problem), s.n, h, opts);
  std::cout << res.to_json() << "\n";
  return kExitOk;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
  std::string family;
  std::string range;
  bool with_oracle = false;
  int r = 3;
  std::string format = "markdown";
  int workers = 1;
};

struct Row {
  int n = 0;
  std::string formula;
  std::string construction = "-";
  std::string oracle = "-";
  std::string status = "n/a";
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InputError("bad --n-range '" + s + "' (expected a..b)");
  }
}

std::string describe(const FormulaSet& fs) {
  const auto e = fs.exact(), lo = fs.lower(), hi = fs.upper();
  if (e) return std::to_string(*e);
  if (lo && hi) return "[" + std::to_string(*lo) + ", " + std::to_string(*hi) + "]";
  if (hi) return "<= " + std::to_string(*hi);
  if (lo) return ">= " + std::to_string(*lo);
  return "-";
}

FormulaSet single(const FormulaValue& v) { return FormulaSet{{v}}; }

// Fills construction, oracle and status for one row. `cons` may be empty.
void settle(Row& row, const FormulaSet& fs, const std::optional<BuiltConstruction>& cons, Problem problem,
            const PatternGraph& pattern, const TableArgs& t) {
  bool checked = false;
  bool ok = true;
  std::optional<std::int64_t> cons_edges;
  if (cons) {
    const VerifyReport rep = cons->verify();
    cons_edges = rep.actual_edges;
    row.construction = std::to_string(rep.actual_edges) + (rep.pass() ? " (valid)" : " (INVALID)");
    checked = true;
    ok = ok && rep.pass();
    // A valid construction is a lower bound, so it may not beat the formula.
    const auto ceiling = fs.exact() ? fs.exact() : fs.upper();
    if (rep.pass() && ceiling && rep.actual_edges > *ceiling) ok = false;
  }
  if (t.with_oracle) {
    try {
      GenOptions opts;
      opts.workers = t.workers;
      const ExactResult res = exact_solve(problem, row.n, pattern, opts);
      row.oracle = std::to_string(res.value);
      checked = true;
      if (!fs.admits(res.value)) ok = false;
      if (cons_edges && cons->verify().predicate_holds && *cons_edges > res.value) ok = false;
    } catch (const CostGuardError&) {
      row.oracle = "refused";
    }
  }
  if (checked) row.status = ok ? "AGREE" : "MISMATCH";
}

std::optional<BuiltConstruction> try_build(const std::string& name, const ConstructionParams& p) {
  try {
    return build_construction(name, p);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

Row table_row(const TableArgs& t, int n) {
  Row row;
  row.n = n;
  ConstructionParams p;
  p.n = n;
  if (t.family == "ts-k3") {
    const FormulaSet fs = ts_k3(n);
    row.formula = describe(fs);
    settle(row, fs, try_build("caro-tuza-k3", p), Problem::TS, PatternGraph::named("K3"), t);
  } else if (t.family == "ts-p3") {
    const FormulaSet fs = single(ts_p3(n));
    row.formula = describe(fs);
    settle(row, fs, try_build("p3-extremal", p), Problem::TS, PatternGraph::named("P3"), t);
  } else if (t.family == "wex-p3") {
    const FormulaSet fs = single(wex_p3(n));
    row.formula = describe(fs);
    p.pattern = "P3";
    p.intra = "matching";
    settle(row, fs, try_build("worm-turan", p), Problem::WEX, PatternGraph::named("P3"), t);
  } else if (t.family == "rex-k3") {
    const PatternGraph k3 = PatternGraph::named("K3");
    const FormulaSet fs = rex_values(n, k3);
    row.formula = describe(fs);
    p.g = 3;
    auto cons = try_build("regular-odd-girth", p);
    settle(row, fs, cons, Problem::REX, k3, t);
  } else if (t.family == "clique") {
    const FormulaSet fs = ts_clique_bounds(n, t.r);
    row.formula = describe(fs);
    p.r = t.r;
    std::optional<BuiltConstruction> cons;
    if (n % t.r == 0) {
      cons = try_build("property-r", p);
    } else {
      // The lower bound is the better of the two constructions.
      cons = try_build("clique-extension", p);
      auto alt = try_build("matching-removal", p);
      if (alt && (!cons || alt->predicted_edges > cons->predicted_edges)) cons = std::move(alt);
    }
    settle(row, fs, cons, Problem::TS, PatternGraph::named("K" + std::to_string(t.r + 1)), t);
  } else {
    throw InputError("unknown family '" + t.family + "'");
  }
  return row;
}

int run_table(const TableArgs& t) {
  const auto [lo, hi] = parse_range(t.range);
  if (lo > hi) throw InputError("empty --n-range");
  std::vector<Row> rows;
  for (int n = lo; n <= hi; ++n) rows.push_back(table_row(t, n));

  const bool color = t.format == "markdown" && use_color();
  auto paint = [&](const std::string& s) {
    if (!color) return s;
    if (s == "MISMATCH") return "\033[31m" + s + "\033[0m";
    if (s == "AGREE") return "\033[32m" + s + "\033[0m";
    return s;
  };
  bool mismatch = false;
  if (t.format == "csv") {
    std::cout << "n,formula,construction,oracle,status\n";
    for (const auto& r : rows)
      std::cout << r.n << ",\"" << r.formula << "\",\"" << r.construction << "\"," << r.oracle << "," << r.status
                << "\n";
  } else {
    std::cout << "| n | formula | construction | oracle | status |\n|---|---|---|---|---|\n";
    for (const auto& r : rows)
      std::cout << "| " << r.n << " | " << r.formula << " | " << r.construction << " | " << r.oracle << " | "
                << paint(r.status) << " |\n";
  }
  for (const auto& r : rows) mismatch = mismatch || r.status == "MISMATCH";
  return mismatch ? kExitWitness : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular Turán numbers, WORM colourings and their exact small cases"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a named construction");
  construct->add_option("name", ca.name, "Construction name")->required()->check(CLI::IsMember(construction_names()));
  construct->add_option("--n", ca.n, "Number of vertices");
  construct->add_option("--r", ca.r, "Clique parameter r (pattern K_{r+1})");
  construct->add_option("--g", ca.g, "Odd girth parameter");
  construct->add_option("--a", ca.a, "Size of the set A (hanson-toft)");
  construct->add_option("--k", ca.k, "Clique size or degree for --intra");
  construct->add_option("--parts", ca.params.parts, "Part sizes (multipartite)")->delimiter(',');
  construct->add_option("--pattern", ca.pattern, "Pattern name (worm-turan)");
  construct->add_option("--intra", ca.params.intra, "Part filler: none, cliques, regular, matching");
  construct->add_option("--format", ca.format)->check(CLI::IsMember({"graph6", "dot", "json"}));
  construct->add_flag("--verify", ca.verify, "Check edge count and predicate");
  construct->add_option("--out", ca.out, "Output file (default stdout)");

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Look for a singular copy, or validate a WORM colouring");
  check->add_option("--graph", ck.graph, "Host graph in graph6 ('-' reads stdin)")->required();
  check->add_option("--pattern", ck.pattern, "Pattern name (K3, P4, C5, S3, ...)");
  check->add_option("--pattern-g6", ck.pattern_g6, "Pattern in graph6");
  check->add_option("--coloring", ck.coloring, "JSON file with one colour per vertex");

  SolveArgs sv;
  auto* solve = app.add_subcommand("solve", "Exact value by exhaustive search");
  solve->add_option("--problem", sv.problem)->required()->check(CLI::IsMember({"ts", "wex", "ex", "rex"}));
  solve->add_option("--n", sv.n)->required();
  solve->add_option("--pattern", sv.pattern);
  solve->add_option("--pattern-g6", sv.pattern_g6);
  solve->add_option("--workers", sv.workers)->check(CLI::PositiveNumber);
  solve->add_option("--mode", sv.mode)->check(CLI::IsMember({"isomorph-free", "labeled"}));

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Compare formulas, constructions and exact values");
  table->add_option("--family", tb.family)
      ->required()
      ->check(CLI::IsMember({"ts-k3", "ts-p3", "wex-p3", "rex-k3", "clique"}));
  table->add_option("--n-range", tb.range, "a..b")->required();
  table->add_flag("--with-oracle", tb.with_oracle);
  table->add_option("--r", tb.r);
  table->add_option("--format", tb.format)->check(CLI::IsMember({"markdown", "csv"}));
  table->add_option("--workers", tb.workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*check) return run_check(ck);
    if (*solve) return run_solve(sv);
    if (*table) return run_table(tb);
  } catch (const CostGuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitInput;
  } catch (const Graph6Error& e) {
    std::cerr << "error: malformed graph6 at byte " << e.offset() << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
