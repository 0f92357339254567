#pragma once

#include <cstdint>

#include "gpnum/graph.hpp"
#include "gpnum/search.hpp"

namespace gpnum {

/// Value of an invariant together with a certifying vertex set.
/// status == exact means the value is optimal.
struct InvariantResult {
  std::size_t value = 0;
  VertexSet witness;
  SearchStatus status = SearchStatus::exact;
  std::uint64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;
};

/// Clique number, by branch-and-bound with a greedy-colouring bound.
InvariantResult omega(const Graph& g, const SearchOptions& options = {});

/// Independence number, as the clique number of the complement.
InvariantResult alpha(const Graph& g, const SearchOptions& options = {});

/// Largest S such that the complement of g induces on S a complete
/// multipartite graph with at least two parts. Equivalently, g[S] is a
/// disjoint union of at least two cliques. When no such set exists (g
/// complete, or fewer than two vertices) the value is min(n, 1), witnessed by
/// vertex 0.
InvariantResult eta(const Graph& g, const SearchOptions& options = {});

/// Largest union of pairwise independent cliques, i.e. the largest S with
/// g[S] a disjoint union of cliques (an induced P3-free subgraph).
InvariantResult rho(const Graph& g, const SearchOptions& options = {});

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
/// g[s] is a disjoint union of cliques.
bool is_cluster(const Graph& g, const VertexSet& s);
/// h[s] is complete multipartite with at least two parts: non-adjacency is an
/// equivalence relation on s with two or more classes.
bool induces_complete_multipartite(const Graph& h, const VertexSet& s);

}  // namespace gpnum
