#include "gpnum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "gpnum/constructions.hpp"
#include "gpnum/error.hpp"
#include "subset_search.hpp"
#include "verify_grids.inc"

namespace gpnum {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::int64_t int_param(const Json& params, const char* key) {
  if (!params.is_object() || !params.contains(key) || !params[key].is_number_integer())
    throw InputError(std::string("grid point needs integer parameter \"") + key + "\"");
  return params[key].get<std::int64_t>();
}

std::size_t size_param(const Json& params, const char* key) {
  const auto v = int_param(params, key);
  if (v < 0) throw InputError(std::string("parameter \"") + key + "\" must be non-negative");
  return static_cast<std::size_t>(v);
}

Graph graph_param(const Json& params, const char* key) {
  if (!params.is_object() || !params.contains(key) || !params[key].is_string())
    throw InputError(std::string("grid point needs graph expression \"") + key + "\"");
  return graph_from_expr(params[key].get<std::string>());
}

std::vector<std::size_t> factors_param(const Json& params) {
  if (!params.is_object() || !params.contains("ns") || !params["ns"].is_array())
    throw InputError("grid point needs factor list \"ns\"");
  std::vector<std::size_t> ns;
  for (const auto& x : params["ns"]) {
    if (!x.is_number_unsigned()) throw InputError("\"ns\" must hold non-negative integers");
    ns.push_back(x.get<std::size_t>());
  }
  return ns;
}

Prediction unavailable(std::string reason) {
  Prediction p;
  p.reason = std::move(reason);
  return p;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

SearchOptions with_budget(const Budget& b) { return SearchOptions{.budget = b}; }

// Exact invariant, or nullopt when the budget ran out.
template <class F>
std::optional<InvariantResult> exact_invariant(F f, const Graph& g, const Budget& b) {
  auto r = f(g, with_budget(b));
  if (r.status != SearchStatus::exact) return std::nullopt;
  return r;
}

Graph theorem_graph(std::string_view id, const Json& params) {
  if (id == "thm2.2") return kneser(size_param(params, "n"), 2);
  if (id == "thm2.3" || id == "ekr") return kneser(size_param(params, "n"), size_param(params, "k"));
  if (id == "thm2.4") return kneser(size_param(params, "n"), 3);
  if (id == "thm3.1") return cartesian_product(graph_param(params, "G"), graph_param(params, "H"));
  if (id == "thm3.2") {
    const auto ns = factors_param(params);
    return hamming(ns);
  }
  if (id == "thm4.1") return graph_param(params, "G");
  if (id == "prop4.2") return join(graph_param(params, "G"), graph_param(params, "H"));
  if (id == "thm4.3") return corona(graph_param(params, "G"), graph_param(params, "H"));
  if (id == "thm4.4") return line_graph(complete(size_param(params, "n")));
  throw InputError("unknown theorem id '" + std::string(id) + "'");
}

void require_theorem(std::string_view id) {
  if (!is_theorem_id(id)) throw InputError("unknown theorem id '" + std::string(id) + "'");
}

GpResult as_gp_result(const InvariantResult& r, std::string method) {
  GpResult out;
  out.value = r.value;
  out.witness = r.witness;
  out.status = r.status;
  out.nodes = r.nodes_explored;
  out.elapsed_ms = r.elapsed_ms;
  out.method = std::move(method);
  return out;
}

std::string predicted_text(const Prediction& p) {
  if (!p.applicable) return "";
  if (p.lower == p.upper) return std::to_string(p.lower);
  return "[" + std::to_string(p.lower) + "," + std::to_string(p.upper) + "]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void expand_into(const Json& object, std::vector<Json>& out) {
  if (!object.is_object() || object.empty()) throw InputError("grid entries must be non-empty objects");
  std::vector<Json> partial{Json::object()};
  for (const auto& [key, value] : object.items()) {
    const Json choices = value.is_array() ? value : Json::array({value});
    if (choices.empty()) throw InputError("grid parameter \"" + key + "\" has no values");
    std::vector<Json> next;
    for (const auto& base : partial)
      for (const auto& c : choices) {
        if (!c.is_number_integer() && !c.is_string() && !c.is_array())
          throw InputError("grid parameter \"" + key + "\" must be integers, strings or lists");
        Json p = base;
        p[key] = c;
        next.push_back(std::move(p));
      }
    partial = std::move(next);
  }
  out.insert(out.end(), partial.begin(), partial.end());
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::within_bound: return "within-bound";
    case Verdict::mismatch: return "mismatch";
    case Verdict::timeout: return "timeout";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"thm2.2", "thm2.3",  "thm2.4", "thm3.1", "thm3.2",
                                            "thm4.1", "prop4.2", "thm4.3", "thm4.4", "ekr"};
  return ids;
}

bool is_theorem_id(std::string_view id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

const Json& default_manifest() {
  static const Json manifest = Json::parse(kVerifyGridsJson);
  return manifest;
}

std::vector<Json> expand_grid(const Json& grid) {
  std::vector<Json> out;
  if (grid.is_object()) {
    expand_into(grid, out);
  } else if (grid.is_array()) {
    for (const auto& entry : grid) expand_into(entry, out);
  } else {
    throw InputError("a grid is an object or an array of objects");
  }
  return out;
}

std::vector<GridPoint> manifest_points(const Json& manifest, const std::vector<std::string>& ids,
                                       GridKind kind) {
  const auto& wanted = ids.empty() ? theorem_ids() : ids;
  const char* key = kind == GridKind::quick ? "quick" : "stretch";
  std::vector<GridPoint> points;
  for (const auto& id : wanted) {
    require_theorem(id);
    if (!manifest.contains(id)) continue;
    const Json& entry = manifest[id];
    if (!entry.is_object()) throw InputError("manifest entry for " + id + " must be an object");
    if (!entry.contains(key)) continue;
    std::optional<std::int64_t> budget;
    if (kind == GridKind::stretch && entry.contains("stretch_budget_ms")) {
      if (!entry["stretch_budget_ms"].is_number_integer())
        throw InputError("stretch_budget_ms must be an integer");
      budget = entry["stretch_budget_ms"].get<std::int64_t>();
    }
    for (auto& params : expand_grid(entry[key])) points.push_back({id, std::move(params), budget});
  }
  return points;
}

Prediction predict(std::string_view id, const Json& params, const Budget& budget) {
  require_theorem(id);
  if (id == "thm2.2") return gp_kneser2(int_param(params, "n"));
  if (id == "thm2.3") return kneser_condition(int_param(params, "n"), int_param(params, "k"));
  if (id == "thm2.4") return gp_kneser3(int_param(params, "n"));
  if (id == "ekr") return star_independence_bound(int_param(params, "n"), int_param(params, "k"));
  if (id == "thm4.4") return gp_line_complete(int_param(params, "n"));
  if (id == "thm3.2") {
    const auto ns = factors_param(params);
    return hamming_lower(ns);
  }

  if (id == "thm3.1") {
    const Graph g = graph_param(params, "G"), h = graph_param(params, "H");
    if (!is_connected(g) || !is_connected(h)) return unavailable("requires connected factors");
    const GpResult gg = gp_auto(g, with_budget(budget)), gh = gp_auto(h, with_budget(budget));
    if (gg.status != SearchStatus::exact || gh.status != SearchStatus::exact)
      return unavailable("gp of a factor is unresolved within the budget");
    Prediction p = gp_cartesian_lower(static_cast<std::int64_t>(gg.value), static_cast<std::int64_t>(gh.value),
                                      static_cast<std::int64_t>(g.order()),
                                      static_cast<std::int64_t>(h.order()));
    p.witness = cartesian_witness(g, gg.witness, h, gh.witness, gg.witness[0], gh.witness[0]);
    return p;
  }

  if (id == "thm4.1") {
    const Graph g = graph_param(params, "G");
    if (diameter(g) != Distance(2)) return unavailable("requires diameter 2");
    const auto om = exact_invariant(omega, g, budget);
    const auto et = exact_invariant(eta, g, budget);
    if (!om || !et) return unavailable("omega or eta is unresolved within the budget");
    Prediction p;
    p.applicable = true;
    p.lower = p.upper = static_cast<std::int64_t>(std::max(om->value, et->value));
    p.witness = om->value >= et->value ? om->witness : et->witness;
    return p;
  }

  const Graph g = graph_param(params, "G"), h = graph_param(params, "H");
  if (id == "prop4.2") {
    JoinFactors f;
    f.order_g = static_cast<std::int64_t>(g.order());
    f.order_h = static_cast<std::int64_t>(h.order());
    f.both_complete = is_complete(g) && is_complete(h);
    const auto og = exact_invariant(omega, g, budget), oh = exact_invariant(omega, h, budget);
    const auto eg = exact_invariant(eta, g, budget), eh = exact_invariant(eta, h, budget);
    const auto rg = exact_invariant(rho, g, budget), rh = exact_invariant(rho, h, budget);
    if (!og || !oh || !eg || !eh || !rg || !rh)
      return unavailable("a factor invariant is unresolved within the budget");
    f.omega_g = static_cast<std::int64_t>(og->value);
    f.omega_h = static_cast<std::int64_t>(oh->value);
    f.eta_g = static_cast<std::int64_t>(eg->value);
    f.eta_h = static_cast<std::int64_t>(eh->value);
    f.rho_g = static_cast<std::int64_t>(rg->value);
    f.rho_h = static_cast<std::int64_t>(rh->value);
    return gp_join(f);
  }

  // thm4.3
  const auto rh = exact_invariant(rho, h, budget);
  if (!rh) return unavailable("rho of the second factor is unresolved within the budget");
  return gp_corona(static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(rh->value),
                   static_cast<std::int64_t>(h.order()), rh->witness);
}

TheoremReport run_point(const GridPoint& point, const Budget& base_budget) {
  const auto start = Clock::now();
  Budget budget = base_budget;
  if (point.budget_ms) budget.max_ms = *point.budget_ms;

  TheoremReport r;
  r.theorem = point.theorem;
  r.params = point.params;
  r.predicted = predict(point.theorem, point.params, budget);
  auto finish = [&](Verdict v, std::string note = {}) {
    r.verdict = v;
    if (!note.empty()) r.note = std::move(note);
    r.elapsed_ms = ms_since(start);
    return r;
  };
  if (!r.predicted.applicable) return finish(Verdict::not_applicable, r.predicted.reason);

  const Graph g = theorem_graph(point.theorem, point.params);
  const bool by_alpha = point.theorem == "ekr";
  const DistanceMatrix dm = distances(g);
  auto valid = [&](const VertexSet& s) {
    return by_alpha ? is_independent(g, s) : is_general_position(dm, s);
  };

  SearchOptions options{.budget = budget};
  const auto& pw = r.predicted.witness;
  if (pw) {
    require_in_range(*pw, g.order());
    if (!valid(*pw) || static_cast<std::int64_t>(pw->size()) < r.predicted.lower)
      return finish(Verdict::mismatch, "predicted witness does not certify the lower value");
    // A certified witness is a valid warm start for either search path.
    if (point.theorem != "thm4.1") options.seed = *pw;
  }

  if (g.order() > detail::kMaxSearchOrder)
    return finish(Verdict::timeout, "order " + std::to_string(g.order()) + " exceeds the search limit; witness of size " +
                                        std::to_string(pw ? pw->size() : 0) + " validated");

  if (by_alpha) {
    r.computed = as_gp_result(alpha(g, options), "alpha");
  } else if (point.theorem == "thm4.1") {
    // The formula is max{ω, η}; compare it with the definition-based search.
    r.computed = gp_exact(g, options);
  } else {
    r.computed = gp_auto(g, options);
  }
  const GpResult& c = *r.computed;
  if (!valid(c.witness) || c.witness.size() != c.value)
    return finish(Verdict::mismatch, "solver witness does not certify its value");

  std::string note;
  if (point.theorem == "prop4.2" && r.predicted.alternate_form &&
      *r.predicted.alternate_form != r.predicted.lower)
    return finish(Verdict::mismatch, "eta-form " + std::to_string(*r.predicted.alternate_form) +
                                         " differs from rho-form " + std::to_string(r.predicted.lower));
  if (c.crosscheck && c.crosscheck->exact && !c.crosscheck->agrees)
    return finish(Verdict::mismatch, "max{omega, eta} disagrees with rho");
  if (point.theorem == "thm4.1") {
    const InvariantResult rr = rho(g, with_budget(budget));
    if (rr.status == SearchStatus::exact && static_cast<std::int64_t>(rr.value) != r.predicted.lower)
      return finish(Verdict::mismatch, "rho " + std::to_string(rr.value) + " differs from max{omega, eta}");
    if (rr.status != SearchStatus::exact) note = "rho unresolved";
  }

  const auto value = static_cast<std::int64_t>(c.value);
  const bool interval = r.predicted.lower != r.predicted.upper;
  if (value > r.predicted.upper) return finish(Verdict::mismatch, "value above the prediction");
  if (c.status == SearchStatus::exact) {
    if (value < r.predicted.lower) return finish(Verdict::mismatch, "value below the prediction");
    return finish(interval ? Verdict::within_bound : Verdict::match, note);
  }
  // An incumbent already at the lower end settles a pure lower-bound claim.
  if (interval && value >= r.predicted.lower)
    return finish(Verdict::within_bound, "settled by the incumbent before the budget ran out");
  return finish(Verdict::timeout, "budget exhausted");
}

std::vector<TheoremReport> run_points(const std::vector<GridPoint>& points,
                                      const VerifyOptions& options) {
  std::vector<TheoremReport> reports(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < points.size();) {
      try {
        reports[i] = run_point(points[i], options.budget);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(points.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return reports;
}

std::vector<TheoremReport> run_verify(std::string_view theorem, const Json& grid,
                                      const VerifyOptions& options) {
  require_theorem(theorem);
  std::vector<GridPoint> points;
  for (auto& params : expand_grid(grid)) points.push_back({std::string(theorem), std::move(params), {}});
  return run_points(points, options);
}

std::string emit_table(const std::vector<TheoremReport>& reports, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::csv) {
    out << "theorem,params,predicted,computed,status,verdict,ms\n";
    for (const auto& r : reports) {
      out << csv_field(r.theorem) << ',' << csv_field(r.params.dump()) << ','
          << csv_field(predicted_text(r.predicted)) << ','
          << (r.computed ? std::to_string(r.computed->value) : "") << ','
          << (r.computed ? std::string(to_string(r.computed->status)) : "") << ','
          << to_string(r.verdict) << ',' << r.elapsed_ms << '\n';
    }
  } else {
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
  }
  return out.str();
}

int verify_exit_code(const std::vector<TheoremReport>& reports, bool strict) {
  bool timeout = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::mismatch) return 1;
    timeout = timeout || r.verdict == Verdict::timeout;
  }
  return strict && timeout ? 3 : 0;
}

Json to_json(const VertexSet& s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

Json to_json(const GpResult& r) {
  Json j;
  j["value"] = r.value;
  j["witness"] = to_json(r.witness);
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes;
  j["ms"] = r.elapsed_ms;
  j["method"] = r.method;
  if (r.crosscheck) {
    j["crosscheck"] = {{"omega", r.crosscheck->omega},
                       {"eta", r.crosscheck->eta},
                       {"exact", r.crosscheck->exact},
                       {"agrees", r.crosscheck->agrees}};
  }
  return j;
}

Json to_json(const InvariantResult& r) {
  Json j;
  j["value"] = r.value;
  j["witness"] = to_json(r.witness);
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes_explored;
  j["ms"] = r.elapsed_ms;
  return j;
}

Json prediction_json(std::string_view theorem, const Json& params, const Prediction& p) {
  Json j;
  j["theorem"] = theorem;
  j["params"] = params;
  j["applicable"] = p.applicable;
  if (!p.applicable)
    j["value_or_interval"] = nullptr;
  else if (p.lower == p.upper)
    j["value_or_interval"] = p.lower;
  else
    j["value_or_interval"] = Json::array({p.lower, p.upper});
  j["witness"] = p.witness ? to_json(*p.witness) : Json(nullptr);
  if (!p.applicable) j["reason"] = p.reason;
  if (p.alternate_form) j["alternate_form"] = *p.alternate_form;
  if (p.failing_t) j["failing_t"] = *p.failing_t;
  return j;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["params"] = r.params;
  const Prediction& p = r.predicted;
  if (!p.applicable)
    j["predicted"] = nullptr;
  else if (p.lower == p.upper)
    j["predicted"] = p.lower;
  else
    j["predicted"] = Json::array({p.lower, p.upper});
  j["computed"] = r.computed ? Json(r.computed->value) : Json(nullptr);
  j["status"] = r.computed ? Json(to_string(r.computed->status)) : Json(nullptr);
  j["method"] = r.computed ? Json(r.computed->method) : Json(nullptr);
  j["nodes"] = r.computed ? Json(r.computed->nodes) : Json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["ms"] = r.elapsed_ms;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace gpnum
