#pragma once

// Builders that phrase each optimisation problem as a forbidden pair/triple
// structure over vertices renumbered by branching priority.

#include <vector>

#include "gpnum/graph.hpp"
#include "subset_search.hpp"

namespace gpnum::detail {

struct Problem {
  ForbiddenStructure structure;
  std::vector<Vertex> original;  // rank -> vertex
};

/// Non-adjacent pairs are forbidden.
Problem clique_problem(const Graph& g);

/// Triples inducing a path on three vertices are forbidden.
Problem cluster_problem(const Graph& g);

/// Triples {u, v, w} with all distances finite and one vertex on a geodesic
/// between the other two are forbidden.
Problem general_position_problem(const Graph& g, const DistanceMatrix& dm);

/// True when one of a, b, c lies on a shortest path between the other two.
bool collinear(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c);

}  // namespace gpnum::detail
