// gpnum command-line front end. Talks to the library only through gpnum.h.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpnum/gpnum.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr std::int64_t kDefaultBudgetMs = 10000;

struct Failure {
  int code;
  std::string message;
};

// Library messages for parse errors already carry the byte offset.
void check(gpn_status status) {
  if (status != GPN_OK) throw Failure{kExitInput, gpn_last_error()};
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out(s);
  gpn_string_free(s);
  return out;
}

struct GraphHandle {
  gpn_graph* g = nullptr;
  ~GraphHandle() { gpn_graph_free(g); }
};

void load_graph(GraphHandle& h, const std::string& file, const std::string& expr) {
  if (!file.empty() && !expr.empty()) throw Failure{kExitInput, "give either --graph or --expr, not both"};
  if (!file.empty())
    check(gpn_graph_read(file.c_str(), &h.g));
  else if (!expr.empty())
    check(gpn_graph_from_expr(expr.c_str(), &h.g));
  else
    throw Failure{kExitInput, "a graph is required (--graph FILE or --expr EXPR)"};
}

std::int64_t default_budget_ms() {
  const char* env = std::getenv("GP_BUDGET_MS");
  if (env == nullptr || *env == '\0') return kDefaultBudgetMs;
  std::int64_t v = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < 0)
    throw Failure{kExitInput, "GP_BUDGET_MS must be a non-negative integer, got '" + std::string(env) + "'"};
  return v;
}

struct BudgetFlags {
  std::uint64_t nodes = 0;
  std::int64_t ms = -1;

  void attach(CLI::App* app) {
    app->add_option("--budget-nodes", nodes, "Search node limit (0 = unlimited)");
    app->add_option("--budget-ms", ms, "Wall-clock limit per instance in ms (default GP_BUDGET_MS or 10000; 0 = unlimited)")
        ->check(CLI::NonNegativeNumber);
  }
  gpn_budget get() const { return gpn_budget{nodes, ms >= 0 ? ms : default_budget_ms()}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInput, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int print_result(gpn_result* r) {
  char* json = nullptr;
  const gpn_status st = gpn_result_json(r, &json);
  const int exact = gpn_result_exact(r);
  gpn_result_free(r);
  check(st);
  std::cout << take(json) << '\n';
  return exact ? kExitOk : kExitBudget;
}

std::vector<std::uint32_t> parse_set(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::string cleaned;
  for (char c : text) cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Failure{kExitInput, "bad vertex id '" + tok + "' in --set"};
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact general position numbers of graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gpn_version()));

  // construct
  std::string c_expr, c_format = "graph6", c_out;
  auto* construct = app.add_subcommand("construct", "Build a named graph and print it");
  construct->add_option("expr", c_expr, "Graph expression, e.g. kneser(5,2), cart(K3,K4), corona(P3,K2)")->required();
  construct->add_option("--format", c_format, "graph6 or json")->check(CLI::IsMember({"graph6", "json"}));
  construct->add_option("--out", c_out, "Write to a file instead of standard output");

  // gp
  std::string g_file, g_expr, g_method = "auto";
  BudgetFlags g_budget;
  auto* gp = app.add_subcommand("gp", "Compute gp(G)");
  gp->add_option("--graph", g_file, "graph6 or sidecar JSON file");
  gp->add_option("--expr", g_expr, "Graph expression instead of a file");
  gp->add_option("--method", g_method, "auto, exact or diam2")->check(CLI::IsMember({"auto", "exact", "diam2"}));
  g_budget.attach(gp);

  // invariant
  std::string i_which, i_file, i_expr;
  BudgetFlags i_budget;
  auto* inv = app.add_subcommand("invariant", "Compute omega, alpha, eta or rho");
  inv->add_option("--which", i_which, "omega, alpha, eta or rho")
      ->required()
      ->check(CLI::IsMember({"omega", "alpha", "eta", "rho"}));
  inv->add_option("--graph", i_file, "graph6 or sidecar JSON file");
  inv->add_option("--expr", i_expr, "Graph expression instead of a file");
  i_budget.attach(inv);

  // predict
  std::string p_theorem, p_params = "{}";
  BudgetFlags p_budget;
  auto* predict = app.add_subcommand("predict", "Evaluate a theorem's formula at one parameter point");
  predict->add_option("--theorem", p_theorem, "Theorem id")->required();
  predict->add_option("--params", p_params, R"(Parameters as JSON, e.g. {"n":7} or {"G":"P3","H":"K2"})");
  p_budget.attach(predict);

  // verify
  std::vector<std::string> v_theorems;
  bool v_all = false, v_quick = false, v_stretch = false, v_strict = false;
  std::string v_grid, v_format = "jsonl";
  unsigned v_jobs = 1;
  BudgetFlags v_budget;
  auto* verify = app.add_subcommand("verify", "Sweep theorem grids against the solver");
  verify->add_flag("--all", v_all, "Every registered theorem");
  verify->add_option("--theorem", v_theorems, "Theorem id (repeatable)");
  auto* quick_flag = verify->add_flag("--quick", v_quick, "Quick grids (default)");
  verify->add_flag("--stretch", v_stretch, "Stretch grids")->excludes(quick_flag);
  verify->add_flag("--strict", v_strict, "Timeouts fail the run (exit 3)");
  verify->add_option("--grid", v_grid,
                     "Grid manifest replacing the built-in one");
  verify->add_option("--format", v_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  verify->add_option("--jobs", v_jobs, "Grid points run in parallel")->check(CLI::PositiveNumber);
  v_budget.attach(verify);

  // check-set
  std::string s_file, s_expr, s_set;
  auto* check_set = app.add_subcommand("check-set", "Test a vertex set for general position two ways");
  check_set->add_option("--graph", s_file, "graph6 or sidecar JSON file");
  check_set->add_option("--expr", s_expr, "Graph expression instead of a file");
  check_set->add_option("--set", s_set, "Vertex ids, e.g. 0,3,5 or [0,3,5]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*construct) {
      GraphHandle h;
      check(gpn_graph_from_expr(c_expr.c_str(), &h.g));
      const gpn_format f = c_format == "json" ? GPN_FORMAT_JSON : GPN_FORMAT_GRAPH6;
      if (!c_out.empty()) {
        check(gpn_graph_write(h.g, c_out.c_str(), f));
      } else {
        char* text = nullptr;
        check(gpn_graph_encode(h.g, f, &text));
        std::cout << take(text) << '\n';
      }
      return kExitOk;
    }

    if (*gp) {
      GraphHandle h;
      load_graph(h, g_file, g_expr);
      const gpn_method m = g_method == "exact" ? GPN_METHOD_EXACT
                           : g_method == "diam2" ? GPN_METHOD_DIAM2
                                                 : GPN_METHOD_AUTO;
      gpn_result* r = nullptr;
      check(gpn_gp(h.g, m, g_budget.get(), &r));
      return print_result(r);
    }

    if (*inv) {
      GraphHandle h;
      load_graph(h, i_file, i_expr);
      const gpn_invariant_kind k = i_which == "omega"   ? GPN_OMEGA
                                   : i_which == "alpha" ? GPN_ALPHA
                                   : i_which == "eta"   ? GPN_ETA
                                                        : GPN_RHO;
      gpn_result* r = nullptr;
      check(gpn_invariant(h.g, k, i_budget.get(), &r));
      return print_result(r);
    }

    if (*predict) {
      char* json = nullptr;
      check(gpn_predict(p_theorem.c_str(), p_params.c_str(), p_budget.get(), &json));
      std::cout << take(json) << '\n';
      return kExitOk;
    }

    if (*verify) {
      if (v_all && !v_theorems.empty()) throw Failure{kExitInput, "--all and --theorem are exclusive"};
      if (!v_all && v_theorems.empty()) throw Failure{kExitInput, "give --all or at least one --theorem"};
      const gpn_budget budget = v_budget.get();
      gpn_reports* reports = nullptr;
      const std::optional<std::string> manifest =
          v_grid.empty() ? std::nullopt : std::optional<std::string>(read_file(v_grid));
      std::vector<const char*> ids;
      for (const auto& t : v_theorems) ids.push_back(t.c_str());
      check(gpn_verify_manifest(manifest ? manifest->c_str() : nullptr, ids.data(), ids.size(),
                                v_stretch ? GPN_GRID_STRETCH : GPN_GRID_QUICK, budget, v_jobs, &reports));
      char* table = nullptr;
      const gpn_status st =
          gpn_reports_table(reports, v_format == "csv" ? GPN_TABLE_CSV : GPN_TABLE_JSON_LINES, &table);
      const int rc = gpn_reports_exit_code(reports, v_strict ? 1 : 0);
      gpn_reports_free(reports);
      check(st);
      std::cout << take(table) << std::flush;
      return rc == 1 ? kExitMismatch : rc == 3 ? kExitBudget : kExitOk;
    }

    if (*check_set) {
      GraphHandle h;
      load_graph(h, s_file, s_expr);
      const auto members = parse_set(s_set);
      int gp_flag = 0, agree = 0;
      char* json = nullptr;
      check(gpn_check_set(h.g, members.data(), members.size(), &gp_flag, &agree, &json));
      std::cout << take(json) << '\n';
      return agree ? kExitOk : kExitMismatch;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return kExitOk;
}
