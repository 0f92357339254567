#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpnum/graph.hpp"
#include "gpnum/search.hpp"

namespace gpnum {

/// Outcome of the max{ω, η} cross-check run by gp_diam2 after ρ.
struct DiameterTwoCrossCheck {
  std::size_t omega = 0;
  std::size_t eta = 0;
  bool exact = false;  // both searches completed
  bool agrees = false; // exact and max(omega, eta) equals the returned value
};

struct GpResult {
  std::size_t value = 0;
  VertexSet witness;
  SearchStatus status = SearchStatus::exact;
  std::uint64_t nodes = 0;
  std::int64_t elapsed_ms = 0;
  std::string method;  // "exact" or "diam2"
  std::optional<DiameterTwoCrossCheck> crosscheck;
};

/// True iff no member of `s` lies on a geodesic between two others. Triples
/// with an unreachable pair never violate.
bool is_general_position(const DistanceMatrix& dm, const VertexSet& s);

/// Components of G[S] with the distances between them.
struct CliquePartition {
  std::vector<VertexSet> parts;
  /// part_distances[i][j]; zero on the diagonal.
  std::vector<std::vector<Distance>> part_distances;
};

struct PartitionViolation {
  enum class Kind { not_clique, not_distance_constant, not_in_transitive };
  Kind kind;
  /// not_clique: two non-adjacent vertices of one component.
  /// not_distance_constant: u1, v1, u2, v2 with d(u1,v1) != d(u2,v2), u's in one part, v's in another.
  /// not_in_transitive: representatives of parts i, j, k with d(i,k) = d(i,j) + d(j,k).
  std::vector<Vertex> vertices;
};

std::string_view to_string(PartitionViolation::Kind kind);

struct CharacterizationResult {
  bool general_position = false;
  CliquePartition partition;  // complete when general_position holds
  std::optional<PartitionViolation> violation;
};

/// Decides general position through the clique-partition characterization:
/// components of G[S] are cliques forming a distance-constant, in-transitive
/// partition. Requires a connected graph.
CharacterizationResult characterization_check(const Graph& g, const DistanceMatrix& dm,
                                              const VertexSet& s);

/// Exact gp(G) by branch-and-bound straight from the definition. Works on
/// disconnected graphs.
GpResult gp_exact(const Graph& g, const SearchOptions& options = {});

/// gp(G) = ρ(G) for graphs of diameter two, followed by a max{ω, η}
/// cross-check when the budget allows.
GpResult gp_diam2(const Graph& g, const SearchOptions& options = {});

/// gp_diam2 when the diameter is two, gp_exact otherwise.
GpResult gp_auto(const Graph& g, const SearchOptions& options = {});

}  // namespace gpnum
