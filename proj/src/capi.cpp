#include "gpnum/gpnum.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "gpnum/constructions.hpp"
#include "gpnum/error.hpp"
#include "gpnum/harness.hpp"
#include "gpnum/io.hpp"

struct gpn_graph {
  gpnum::Graph g;
};

struct gpn_result {
  gpnum::GpResult r;
  std::vector<std::uint32_t> witness;
};

struct gpn_reports {
  std::vector<gpnum::TheoremReport> reports;
};

namespace {

thread_local std::string last_error;
thread_local std::int64_t last_offset = -1;

template <class F>
gpn_status guarded(F&& f) {
  last_error.clear();
  last_offset = -1;
  try {
    f();
    return GPN_OK;
  } catch (const gpnum::ParseError& e) {
    last_error = e.what();
    last_offset = static_cast<std::int64_t>(e.offset());
    return GPN_PARSE_ERROR;
  } catch (const gpnum::InputError& e) {
    last_error = e.what();
    return GPN_INPUT_ERROR;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return GPN_INPUT_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GPN_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GPN_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw gpnum::InputError(std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gpnum::GraphFormat to_format(gpn_format f) {
  if (f == GPN_FORMAT_GRAPH6) return gpnum::GraphFormat::graph6;
  if (f == GPN_FORMAT_JSON) return gpnum::GraphFormat::json;
  throw gpnum::InputError("unknown graph format");
}

gpnum::Budget to_budget(gpn_budget b) {
  if (b.max_ms < 0) throw gpnum::InputError("budget milliseconds must be non-negative");
  return {b.max_nodes, b.max_ms};
}

gpn_result* wrap(gpnum::GpResult r) {
  auto* out = new gpn_result{std::move(r), {}};
  out->witness.assign(out->r.witness.begin(), out->r.witness.end());
  return out;
}

gpnum::Json parse_json(const char* text, const char* what) {
  require(text, what);
  try {
    return gpnum::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw gpnum::ParseError(std::string(what) + ": " + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

}  // namespace

extern "C" {

const char* gpn_version(void) { return "0.1.0"; }

const char* gpn_last_error(void) { return last_error.c_str(); }

int64_t gpn_last_error_offset(void) { return last_offset; }

void gpn_string_free(char* s) { delete[] s; }

gpn_status gpn_graph_from_expr(const char* expr, gpn_graph** out) {
  return guarded([&] {
    require(expr, "expression");
    require(out, "output");
    *out = new gpn_graph{gpnum::graph_from_expr(expr)};
  });
}

gpn_status gpn_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count,
                                gpn_graph** out) {
  return guarded([&] {
    require(out, "output");
    if (edge_count > 0) require(endpoints, "endpoints");
    if (n > gpnum::kMaxOrder) throw gpnum::InputError("graph order exceeds 65536");
    std::vector<gpnum::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new gpn_graph{gpnum::Graph::from_edges(n, edges)};
  });
}

gpn_status gpn_graph_parse(const char* text, size_t length, gpn_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new gpn_graph{gpnum::parse_graph(std::string_view(text, length))};
  });
}

gpn_status gpn_graph_read(const char* path, gpn_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new gpn_graph{gpnum::read_graph(path)};
  });
}

gpn_status gpn_graph_write(const gpn_graph* g, const char* path, gpn_format format) {
  return guarded([&] {
    require(g, "graph");
    require(path, "path");
    gpnum::write_graph(g->g, path, to_format(format));
  });
}

gpn_status gpn_graph_encode(const gpn_graph* g, gpn_format format, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    *out = copy_string(gpnum::encode_graph(g->g, to_format(format)));
  });
}

void gpn_graph_free(gpn_graph* g) { delete g; }

size_t gpn_graph_order(const gpn_graph* g) { return g ? g->g.order() : 0; }

size_t gpn_graph_size(const gpn_graph* g) { return g ? g->g.size() : 0; }

int gpn_graph_adjacent(const gpn_graph* g, uint32_t u, uint32_t v) {
  if (!g || u >= g->g.order() || v >= g->g.order()) return 0;
  return g->g.adjacent(u, v) ? 1 : 0;
}

int64_t gpn_graph_diameter(const gpn_graph* g) {
  if (!g) return -1;
  const gpnum::Distance d = gpnum::diameter(g->g);
  return d.finite() ? static_cast<int64_t>(d.hops()) : -1;
}

gpn_status gpn_gp(const gpn_graph* g, gpn_method method, gpn_budget budget, gpn_result** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    const gpnum::SearchOptions options{.budget = to_budget(budget)};
    switch (method) {
      case GPN_METHOD_AUTO: *out = wrap(gpnum::gp_auto(g->g, options)); return;
      case GPN_METHOD_EXACT: *out = wrap(gpnum::gp_exact(g->g, options)); return;
      case GPN_METHOD_DIAM2: *out = wrap(gpnum::gp_diam2(g->g, options)); return;
    }
    throw gpnum::InputError("unknown method");
  });
}

gpn_status gpn_invariant(const gpn_graph* g, gpn_invariant_kind which, gpn_budget budget,
                         gpn_result** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    const gpnum::SearchOptions options{.budget = to_budget(budget)};
    gpnum::InvariantResult r;
    const char* name = nullptr;
    switch (which) {
      case GPN_OMEGA: r = gpnum::omega(g->g, options), name = "omega"; break;
      case GPN_ALPHA: r = gpnum::alpha(g->g, options), name = "alpha"; break;
      case GPN_ETA: r = gpnum::eta(g->g, options), name = "eta"; break;
      case GPN_RHO: r = gpnum::rho(g->g, options), name = "rho"; break;
      default: throw gpnum::InputError("unknown invariant");
    }
    gpnum::GpResult as;
    as.value = r.value;
    as.witness = r.witness;
    as.status = r.status;
    as.nodes = r.nodes_explored;
    as.elapsed_ms = r.elapsed_ms;
    as.method = name;
    *out = wrap(std::move(as));
  });
}

size_t gpn_result_value(const gpn_result* r) { return r ? r->r.value : 0; }

int gpn_result_exact(const gpn_result* r) {
  return r && r->r.status == gpnum::SearchStatus::exact ? 1 : 0;
}

size_t gpn_result_witness_size(const gpn_result* r) { return r ? r->witness.size() : 0; }

const uint32_t* gpn_result_witness(const gpn_result* r) { return r ? r->witness.data() : nullptr; }

uint64_t gpn_result_nodes(const gpn_result* r) { return r ? r->r.nodes : 0; }

int64_t gpn_result_ms(const gpn_result* r) { return r ? r->r.elapsed_ms : 0; }

const char* gpn_result_method(const gpn_result* r) { return r ? r->r.method.c_str() : ""; }

gpn_status gpn_result_json(const gpn_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "output");
    *out = copy_string(gpnum::to_json(r->r).dump());
  });
}

void gpn_result_free(gpn_result* r) { delete r; }

gpn_status gpn_check_set(const gpn_graph* g, const uint32_t* members, size_t count,
                         int* general_position, int* agree, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    if (count > 0) require(members, "members");
    const gpnum::VertexSet s(std::vector<gpnum::Vertex>(members, members + count));
    gpnum::require_in_range(s, g->g.order());
    const gpnum::DistanceMatrix dm = gpnum::distances(g->g);
    const bool gp = gpnum::is_general_position(dm, s);

    gpnum::Json j;
    j["set"] = gpnum::to_json(s);
    j["general_position"] = gp;
    bool same = true;
    if (gpnum::is_connected(g->g)) {
      const auto c = gpnum::characterization_check(g->g, dm, s);
      same = c.general_position == gp;
      gpnum::Json cj;
      cj["general_position"] = c.general_position;
      if (c.general_position) {
        gpnum::Json parts = gpnum::Json::array();
        for (const auto& p : c.partition.parts) parts.push_back(gpnum::to_json(p));
        cj["parts"] = std::move(parts);
      } else if (c.violation) {
        cj["violation"] = {{"kind", gpnum::to_string(c.violation->kind)},
                           {"vertices", c.violation->vertices}};
      }
      j["characterization"] = std::move(cj);
    } else {
      j["characterization"] = nullptr;
    }
    j["agree"] = same;
    if (general_position) *general_position = gp ? 1 : 0;
    if (agree) *agree = same ? 1 : 0;
    if (json_out) *json_out = copy_string(j.dump());
  });
}

gpn_status gpn_predict(const char* theorem, const char* params_json, gpn_budget budget,
                       char** json_out) {
  return guarded([&] {
    require(theorem, "theorem");
    require(json_out, "output");
    const gpnum::Json params = parse_json(params_json, "params");
    const gpnum::Prediction p = gpnum::predict(theorem, params, to_budget(budget));
    *json_out = copy_string(gpnum::prediction_json(theorem, params, p).dump());
  });
}

gpn_status gpn_theorem_ids(char** json_out) {
  return guarded([&] {
    require(json_out, "output");
    *json_out = copy_string(gpnum::Json(gpnum::theorem_ids()).dump());
  });
}

gpn_status gpn_verify_manifest(const char* manifest_json, const char* const* ids, size_t id_count,
                               gpn_grid_kind kind, gpn_budget budget, unsigned jobs,
                               gpn_reports** out) {
  return guarded([&] {
    require(out, "output");
    const gpnum::Json manifest =
        manifest_json ? parse_json(manifest_json, "manifest") : gpnum::default_manifest();
    std::vector<std::string> wanted;
    for (size_t i = 0; ids && i < id_count; ++i) {
      require(ids[i], "theorem id");
      wanted.emplace_back(ids[i]);
    }
    const auto points = gpnum::manifest_points(
        manifest, wanted, kind == GPN_GRID_STRETCH ? gpnum::GridKind::stretch : gpnum::GridKind::quick);
    *out = new gpn_reports{gpnum::run_points(points, {to_budget(budget), jobs})};
  });
}

gpn_status gpn_verify_grid(const char* theorem, const char* grid_json, gpn_budget budget,
                           unsigned jobs, gpn_reports** out) {
  return guarded([&] {
    require(theorem, "theorem");
    require(out, "output");
    const gpnum::Json grid = parse_json(grid_json, "grid");
    *out = new gpn_reports{gpnum::run_verify(theorem, grid, {to_budget(budget), jobs})};
  });
}

size_t gpn_reports_count(const gpn_reports* r) { return r ? r->reports.size() : 0; }

const char* gpn_reports_verdict(const gpn_reports* r, size_t i) {
  if (!r || i >= r->reports.size()) return "";
  return gpnum::to_string(r->reports[i].verdict).data();
}

gpn_status gpn_reports_table(const gpn_reports* r, gpn_table_format format, char** out) {
  return guarded([&] {
    require(r, "reports");
    require(out, "output");
    *out = copy_string(gpnum::emit_table(
        r->reports, format == GPN_TABLE_CSV ? gpnum::TableFormat::csv : gpnum::TableFormat::json_lines));
  });
}

int gpn_reports_exit_code(const gpn_reports* r, int strict) {
  return r ? gpnum::verify_exit_code(r->reports, strict != 0) : 0;
}

void gpn_reports_free(gpn_reports* r) { delete r; }

}  // extern "C"
