#pragma once

// Graph families with fixed canonical labelings:
//   kneser        k-subsets of [1..n] in lexicographic order, vertex 0 = {1..k}
//   product       (a, b) -> a * n(h) + b (row-major)
//   join / union  vertices of g first, then h
//   corona        the n(g) centers first, then copies H_1..H_n(g) in blocks
//   line graph    edges (u, v), u < v, in lexicographic order

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gpnum/graph.hpp"

namespace gpnum {

/// k-element subset of [1..n], strictly increasing.
using KSubset = std::vector<std::uint32_t>;

Graph complete(std::size_t n);
Graph edgeless(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);

Graph kneser(std::size_t n, std::size_t k);
/// All k-subsets of [1..n] in the lexicographic order used by kneser().
std::vector<KSubset> k_subsets(std::size_t n, std::size_t k);
/// Position of `s` (a k-subset of [1..n]) in lexicographic order.
Vertex kneser_vertex(std::size_t n, const KSubset& s);

Graph cartesian_product(const Graph& g, const Graph& h);
/// K_{n1} □ ... □ K_{nk}; coordinates are mixed-radix, first factor most significant.
Graph hamming(std::span<const std::size_t> ns);

Graph join(const Graph& g, const Graph& h);
Graph corona(const Graph& g, const Graph& h);
Graph line_graph(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Builds a graph from a compact expression, e.g. "K3", "P4", "C5", "E2"
/// (edgeless), "petersen", "kneser(5,2)", "hamming(2,2,2)", "cart(K3,P3)",
/// "join(P3,K1)", "corona(K2,P3)", "line(K4)", "union(K2,K2)", "complement(C4)".
Graph graph_from_expr(std::string_view expr);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace gpnum
