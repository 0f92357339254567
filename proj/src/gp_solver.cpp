#include "gpnum/gp_solver.hpp"

#include <chrono>

#include "gpnum/error.hpp"
#include "gpnum/invariants.hpp"
#include "problems.hpp"
#include "subset_search.hpp"

namespace gpnum {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Budget left after `spent`; nullopt when exhausted.
std::optional<Budget> remaining(const Budget& b, std::uint64_t nodes, std::int64_t ms) {
  Budget r = b;
  if (b.max_nodes > 0) {
    if (nodes >= b.max_nodes) return std::nullopt;
    r.max_nodes = b.max_nodes - nodes;
  }
  if (b.max_ms > 0) {
    if (ms >= b.max_ms) return std::nullopt;
    r.max_ms = b.max_ms - ms;
  }
  return r;
}

}  // namespace

std::string_view to_string(PartitionViolation::Kind kind) {
  switch (kind) {
    case PartitionViolation::Kind::not_clique: return "not-clique";
    case PartitionViolation::Kind::not_distance_constant: return "not-distance-constant";
    case PartitionViolation::Kind::not_in_transitive: return "not-in-transitive";
  }
  return "unknown";
}

bool is_general_position(const DistanceMatrix& dm, const VertexSet& s) {
  require_in_range(s, dm.order());
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      for (std::size_t k = j + 1; k < m.size(); ++k)
        if (detail::collinear(dm, m[i], m[j], m[k])) return false;
  return true;
}

CharacterizationResult characterization_check(const Graph& g, const DistanceMatrix& dm,
                                              const VertexSet& s) {
  if (dm.order() != g.order()) throw InputError("distance matrix does not match graph");
  require_in_range(s, g.order());
  if (!is_connected(g)) throw InputError("characterization check requires a connected graph");

  CharacterizationResult out;
  const Graph sub = induced_subgraph(g, s);
  for (const auto& comp : connected_components(sub)) {
    std::vector<Vertex> members;
    for (Vertex i : comp) members.push_back(s[i]);
    out.partition.parts.emplace_back(std::move(members));
  }
  auto& parts = out.partition.parts;
  using Kind = PartitionViolation::Kind;

  for (const auto& part : parts)
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (!g.adjacent(part[i], part[j])) {
          out.violation = PartitionViolation{Kind::not_clique, {part[i], part[j]}};
          return out;
        }

  const std::size_t p = parts.size();
  auto& pd = out.partition.part_distances;
  pd.assign(p, std::vector<Distance>(p, Distance(0)));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      const Distance ref = dm(parts[i][0], parts[j][0]);
      for (Vertex u : parts[i])
        for (Vertex v : parts[j])
          if (dm(u, v) != ref) {
            out.violation =
                PartitionViolation{Kind::not_distance_constant, {parts[i][0], parts[j][0], u, v}};
            return out;
          }
      pd[i][j] = pd[j][i] = ref;
    }

  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) {
        if (i == j || j == k || i == k) continue;
        if (pd[i][k] == pd[i][j] + pd[j][k]) {
          out.violation =
              PartitionViolation{Kind::not_in_transitive, {parts[i][0], parts[j][0], parts[k][0]}};
          return out;
        }
      }

  out.general_position = true;
  return out;
}

GpResult gp_exact(const Graph& g, const SearchOptions& options) {
  const auto start = Clock::now();
  const DistanceMatrix dm = distances(g);
  const detail::Problem p = detail::general_position_problem(g, dm);
  detail::SearchRequest req;
  req.structure = &p.structure;
  req.original = p.original;
  req.seed.assign(options.seed.begin(), options.seed.end());
  req.budget = options.budget;
  req.bound = options.bound;
  const auto out = detail::maximum_feasible_subset(req);

  GpResult r;
  r.value = out.best.size();
  r.witness = VertexSet(out.best);
  r.status = out.complete ? SearchStatus::exact : SearchStatus::lower_bound;
  r.nodes = out.nodes;
  r.method = "exact";
  r.elapsed_ms = ms_since(start);
  return r;
}

GpResult gp_diam2(const Graph& g, const SearchOptions& options) {
  const auto start = Clock::now();
  const Distance diam = diameter(g);
  if (diam != Distance(2))
    throw InputError("diameter-two method requires diameter 2, got " +
                     (diam.finite() ? std::to_string(diam.hops()) : std::string("infinity")));

  const InvariantResult rho_result = rho(g, options);
  GpResult r;
  r.value = rho_result.value;
  r.witness = rho_result.witness;
  r.status = rho_result.status;
  r.nodes = rho_result.nodes_explored;
  r.method = "diam2";

  if (r.status == SearchStatus::exact) {
    if (auto left = remaining(options.budget, r.nodes, ms_since(start))) {
      const InvariantResult om = omega(g, {.budget = *left, .bound = options.bound});
      r.nodes += om.nodes_explored;
      SearchOptions eta_options{.budget = *left, .bound = options.bound};
      // ρ's witness is a valid η incumbent whenever it is not a single clique.
      if (!is_clique(g, r.witness)) eta_options.seed = r.witness;
      if (auto left2 = remaining(options.budget, r.nodes, ms_since(start))) {
        eta_options.budget = *left2;
        const InvariantResult et = eta(g, eta_options);
        r.nodes += et.nodes_explored;
        DiameterTwoCrossCheck cc;
        cc.omega = om.value;
        cc.eta = et.value;
        cc.exact = om.status == SearchStatus::exact && et.status == SearchStatus::exact;
        cc.agrees = cc.exact && std::max(cc.omega, cc.eta) == r.value;
        r.crosscheck = cc;
      }
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

GpResult gp_auto(const Graph& g, const SearchOptions& options) {
  if (diameter(g) == Distance(2)) return gp_diam2(g, options);
  return gp_exact(g, options);
}

}  // namespace gpnum
