#include "gpnum/invariants.hpp"

#include <chrono>
#include <functional>

#include "problems.hpp"
#include "subset_search.hpp"

namespace gpnum {

namespace {

InvariantResult from_outcome(const detail::SearchOutcome& out, std::chrono::steady_clock::time_point start) {
  InvariantResult r;
  r.value = out.best.size();
  r.witness = VertexSet(out.best);
  r.status = out.complete ? SearchStatus::exact : SearchStatus::lower_bound;
  r.nodes_explored = out.nodes;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

InvariantResult run(const detail::Problem& p, const SearchOptions& options,
                    std::function<bool(std::span<const Vertex>)> accept = {}) {
  const auto start = std::chrono::steady_clock::now();
  detail::SearchRequest req;
  req.structure = &p.structure;
  req.original = p.original;
  req.accept = std::move(accept);
  req.seed.assign(options.seed.begin(), options.seed.end());
  req.budget = options.budget;
  req.bound = options.bound;
  return from_outcome(detail::maximum_feasible_subset(req), start);
}

}  // namespace

InvariantResult omega(const Graph& g, const SearchOptions& options) {
  return run(detail::clique_problem(g), options);
}

InvariantResult alpha(const Graph& g, const SearchOptions& options) {
  return omega(complement(g), options);
}

InvariantResult rho(const Graph& g, const SearchOptions& options) {
  return run(detail::cluster_problem(g), options);
}

InvariantResult eta(const Graph& g, const SearchOptions& options) {
  auto not_clique = [&g](std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!g.adjacent(s[i], s[j])) return true;
    return false;
  };
  InvariantResult r = run(detail::cluster_problem(g), options, not_clique);
  if (r.value == 0 && g.order() > 0) {
    r.value = 1;
    r.witness = VertexSet{0};
  }
  return r;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  require_in_range(s, g.order());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  require_in_range(s, g.order());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_cluster(const Graph& g, const VertexSet& s) {
  const Graph sub = induced_subgraph(g, s);
  for (const auto& comp : connected_components(sub))
    if (!is_clique(sub, comp)) return false;
  return true;
}

bool induces_complete_multipartite(const Graph& h, const VertexSet& s) {
  require_in_range(s, h.order());
  // Group by non-adjacency; each vertex joins the class of the first earlier
  // member it is not adjacent to.
  std::vector<std::vector<Vertex>> parts;
  for (Vertex v : s) {
    bool placed = false;
    for (auto& part : parts)
      if (!h.adjacent(part.front(), v)) {
        part.push_back(v);
        placed = true;
        break;
      }
    if (!placed) parts.push_back({v});
  }
  if (parts.size() < 2) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (Vertex a : parts[i])
        for (Vertex b : parts[j]) {
          if (a == b) continue;
          if ((i == j) == h.adjacent(a, b)) return false;
        }
  return true;
}

}  // namespace gpnum
