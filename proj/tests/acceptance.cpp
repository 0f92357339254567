// Acceptance suite: one PASS/FAIL line per criterion; exits 1 if any fails.
// `--strict` runs the stretch form of criterion 3 with a ten-minute budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpnum/constructions.hpp"
#include "gpnum/formulas.hpp"
#include "gpnum/gp_solver.hpp"
#include "gpnum/invariants.hpp"
#include "oracle.hpp"

using namespace gpnum;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Outcome kneser_two() {
  Outcome o;
  for (std::int64_t n = 4; n <= 9; ++n) {
    const GpResult r = gp_auto(kneser(static_cast<std::size_t>(n), 2));
    const Prediction p = gp_kneser2(n);
    if (r.status != SearchStatus::exact || as_int(r.value) != p.lower)
      fail(o, fmt("n=%lld: computed %zu, predicted %lld", static_cast<long long>(n), r.value,
                  static_cast<long long>(p.lower)));
  }
  if (o.pass) o.detail = "n=4..9 all equal the prediction";
  return o;
}

Outcome kneser_three_small() {
  Outcome o;
  const GpResult six = gp_auto(kneser(6, 3));
  if (six.status != SearchStatus::exact || six.value != 20) fail(o, fmt("K(6,3): %zu", six.value));
  const GpResult eight = gp_auto(kneser(8, 3), {.budget = {.max_ms = 60'000}, .seed = kneser_star(8, 3)});
  if (eight.value < 21) fail(o, fmt("K(8,3): %zu below the star", eight.value));
  if (eight.status == SearchStatus::exact && eight.value != 21) fail(o, fmt("K(8,3): %zu", eight.value));
  if (o.pass)
    o.detail = eight.status == SearchStatus::exact ? "K(6,3)=20, K(8,3)=21 exact"
                                                   : "K(6,3)=20, K(8,3)>=21 (budget exhausted; stretch-only)";
  return o;
}

Outcome kneser_seven_three(bool strict) {
  Outcome o;
  const Graph g = kneser(7, 3);
  const SearchOptions options{.budget = {.max_ms = strict ? 600'000 : 10'000}, .seed = kneser_star(7, 3)};
  const GpResult r = gp_exact(g, options);
  if (!is_general_position(distances(g), r.witness)) fail(o, "witness is not in general position");
  if (r.value < 15) fail(o, fmt("incumbent %zu below 15", r.value));
  if (r.status == SearchStatus::exact && r.value != 15) fail(o, fmt("exact value %zu", r.value));
  if (strict && r.status != SearchStatus::exact) fail(o, "not resolved within 600 s");
  if (o.pass)
    o.detail = fmt("%s: value %zu, status %s", strict ? "strict" : "quick", r.value,
                   std::string(to_string(r.status)).c_str());
  return o;
}

Outcome hamming_two() {
  Outcome o;
  for (std::size_t a = 2; a <= 4; ++a)
    for (std::size_t b = 2; b <= 4; ++b) {
      const GpResult r = gp_auto(cartesian_product(complete(a), complete(b)));
      if (r.status != SearchStatus::exact || r.value != a + b - 2)
        fail(o, fmt("K%zu x K%zu: %zu", a, b, r.value));
    }
  if (o.pass) o.detail = "9 products equal n1+n2-2";
  return o;
}

Outcome cartesian_lower() {
  Outcome o;
  const std::vector<const char*> small{"P3", "P4", "C4", "C5", "K3"};
  std::vector<std::pair<const char*, const char*>> pairs;
  for (auto a : small)
    for (auto b : small) pairs.emplace_back(a, b);
  for (auto a : small) pairs.emplace_back(a, "petersen");
  std::size_t strict_gain = 0;
  for (const auto& [a, b] : pairs) {
    const Graph g = graph_from_expr(a), h = graph_from_expr(b);
    const GpResult rg = gp_auto(g), rh = gp_auto(h);
    const Graph prod = cartesian_product(g, h);
    const GpResult r = gp_exact(prod, {.budget = {.max_ms = 20'000}});
    const std::size_t bound = rg.value + rh.value - 2;
    const VertexSet w = cartesian_witness(g, rg.witness, h, rh.witness, rg.witness[0], rh.witness[0]);
    if (r.status != SearchStatus::exact) fail(o, fmt("%s x %s unresolved", a, b));
    if (r.value < bound) fail(o, fmt("%s x %s: %zu < %zu", a, b, r.value, bound));
    if (w.size() != bound || !is_general_position(distances(prod), w))
      fail(o, fmt("%s x %s: witness invalid", a, b));
    strict_gain += r.value > bound;
  }
  if (o.pass) o.detail = fmt("%zu pairs, bound strict on %zu", pairs.size(), strict_gain);
  return o;
}

Outcome hamming_multi() {
  Outcome o;
  for (const auto& ns : std::vector<std::vector<std::size_t>>{{2, 2, 2}, {2, 3, 2}, {3, 3, 3}, {2, 2, 2, 2}}) {
    const VertexSet w = hamming_witness(ns);
    if (!is_general_position(distances(hamming(ns)), w)) fail(o, "witness invalid");
  }
  const std::vector<std::size_t> q3{2, 2, 2};
  const GpResult cube = gp_exact(hamming(q3));
  if (cube.status != SearchStatus::exact || cube.value < 3) fail(o, fmt("Q3: %zu", cube.value));
  if (o.pass) o.detail = fmt("witnesses valid, gp(Q3)=%zu", cube.value);
  return o;
}

Outcome joins() {
  Outcome o;
  const std::vector<const char*> names{"K1", "K2", "K3", "P3", "P4", "C4", "E2", "E3"};
  std::size_t count = 0;
  for (auto a : names)
    for (auto b : names) {
      const Graph g = graph_from_expr(a), h = graph_from_expr(b);
      JoinFactors f;
      f.omega_g = as_int(omega(g).value);
      f.omega_h = as_int(omega(h).value);
      f.eta_g = as_int(eta(g).value);
      f.eta_h = as_int(eta(h).value);
      f.rho_g = as_int(rho(g).value);
      f.rho_h = as_int(rho(h).value);
      f.order_g = as_int(g.order());
      f.order_h = as_int(h.order());
      f.both_complete = 2 * g.size() == g.order() * (g.order() - 1) && 2 * h.size() == h.order() * (h.order() - 1);
      const Prediction p = gp_join(f);
      const GpResult r = gp_exact(join(g, h));
      if (r.status != SearchStatus::exact || as_int(r.value) != p.lower)
        fail(o, fmt("%s + %s: computed %zu, predicted %lld", a, b, r.value, static_cast<long long>(p.lower)));
      if (!p.alternate_form || *p.alternate_form != p.lower) fail(o, fmt("%s + %s: forms differ", a, b));
      ++count;
    }
  if (o.pass) o.detail = fmt("%zu ordered pairs match, both forms agree", count);
  return o;
}

Outcome coronas() {
  Outcome o;
  for (const char* a : {"K2", "P3", "K3"})
    for (const char* b : {"K1", "K2", "P3"}) {
      const Graph g = graph_from_expr(a), h = graph_from_expr(b);
      const GpResult r = gp_exact(corona(g, h));
      const std::size_t want = g.order() * rho(h).value;
      if (r.status != SearchStatus::exact || r.value != want) fail(o, fmt("%s o %s: %zu != %zu", a, b, r.value, want));
    }
  if (o.pass) o.detail = "9 coronas equal n(G) rho(H)";
  return o;
}

Outcome line_graphs() {
  Outcome o;
  for (std::size_t n = 3; n <= 7; ++n) {
    const GpResult r = gp_auto(line_graph(complete(n)));
    const std::size_t want = n % 3 == 0 ? n : n - 1;
    if (r.status != SearchStatus::exact || r.value != want) fail(o, fmt("n=%zu: %zu != %zu", n, r.value, want));
  }
  if (o.pass) o.detail = "n=3..7 match";
  return o;
}

std::vector<Graph> connected_corpus() {
  std::vector<Graph> corpus;
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) corpus.push_back(oracle::random_connected_graph(2 + i % 6, 0.2 + 0.1 * (i % 7), rng));
  for (const char* e : {"K1", "K2", "K3", "K4", "K5", "K6", "K7", "P2", "P3", "P4", "P5", "P6", "P7", "C3", "C4", "C5",
                        "C6", "C7", "cart(K2,P3)", "cart(K2,K3)", "hamming(2,2)", "join(P3,E2)", "join(E2,E3)",
                        "join(K1,C5)", "join(K1,E6)", "corona(K2,K2)", "corona(K3,K1)", "corona(P3,K1)", "line(K4)",
                        "complement(C6)", "complement(C7)"})
    corpus.push_back(graph_from_expr(e));
  return corpus;
}

Outcome characterization() {
  Outcome o;
  std::size_t subsets = 0, graphs = 0;
  for (const Graph& g : connected_corpus()) {
    if (!is_connected(g) || g.order() > 7) {
      fail(o, "corpus graph outside the class");
      continue;
    }
    const DistanceMatrix dm = distances(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
      const VertexSet s(oracle::members(mask));
      if (is_general_position(dm, s) != characterization_check(g, dm, s).general_position)
        fail(o, fmt("disagreement on a %zu-vertex graph", g.order()));
      ++subsets;
    }
    ++graphs;
  }
  if (o.pass) o.detail = fmt("%zu graphs, %zu subsets agree", graphs, subsets);
  return o;
}

Outcome diameter_two() {
  Outcome o;
  std::vector<Graph> corpus = connected_corpus();
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) corpus.push_back(oracle::random_graph(8, 0.4 + 0.05 * (i % 6), rng));
  std::size_t checked = 0;
  for (const Graph& g : corpus) {
    if (g.order() > 8 || diameter(g) != Distance(2)) continue;
    const GpResult r = gp_exact(g);
    const std::size_t rh = rho(g).value, mx = std::max(omega(g).value, eta(g).value);
    if (r.status != SearchStatus::exact || r.value != rh || rh != mx)
      fail(o, fmt("gp %zu, rho %zu, max(omega, eta) %zu", r.value, rh, mx));
    ++checked;
  }
  if (checked < 100) fail(o, fmt("only %zu diameter-2 graphs", checked));
  if (o.pass) o.detail = fmt("%zu of %zu corpus graphs have diameter 2; all agree", checked, corpus.size());
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 5 + i % 10;
    const Graph g = oracle::random_graph(n, 0.1 + 0.1 * (i % 7), rng);
    const GpResult r = gp_exact(g);
    const std::size_t want = oracle::gp(g);
    if (r.status != SearchStatus::exact || r.value != want) fail(o, fmt("n=%zu: %zu != %zu", n, r.value, want));
  }
  if (o.pass) o.detail = "100 graphs, n=5..14, equal enumeration";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool strict = false;
  app.add_flag("--strict", strict, "Run stretch criteria with their full budgets");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "kneser-k2", 30, kneser_two},
      {2, "kneser-k3-small", 90, kneser_three_small},
      {3, "kneser-7-3", strict ? 660.0 : 30.0, [strict] { return kneser_seven_three(strict); }},
      {4, "hamming-two-factor", 10, hamming_two},
      {5, "cartesian-lower-bound", 60, cartesian_lower},
      {6, "hamming-multi-factor", 5, hamming_multi},
      {7, "join", 60, joins},
      {8, "corona", 120, coronas},
      {9, "line-graph-complete", 60, line_graphs},
      {10, "characterization", 120, characterization},
      {11, "diameter-two", 120, diameter_two},
      {12, "oracle-equivalence", 300, oracle_equivalence},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit_s) fail(o, fmt("took %.2f s", secs));
    std::printf("%s %2d %-22s %.3fs/%.0fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
