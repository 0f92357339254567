#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>

#include "gpnum/graph.hpp"

namespace gpnum {

enum class SearchStatus { exact, lower_bound };

constexpr std::string_view to_string(SearchStatus s) {
  return s == SearchStatus::exact ? "exact" : "lower-bound";
}

/// Search limits. Zero means unlimited. On exhaustion the best set found so
/// far is returned with status lower_bound.
struct Budget {
  std::uint64_t max_nodes = 0;
  std::int64_t max_ms = 0;
};

/// How the branch-and-bound estimates the best completion of a node.
enum class BoundKind {
  /// chosen + candidates
  count,
  /// chosen + a greedy partition of the candidates into groups that can each
  /// contribute at most one or two vertices
  partition,
};

struct SearchOptions {
  Budget budget{};
  BoundKind bound = BoundKind::partition;
  /// Optional warm start; must itself be a valid solution of the problem.
  VertexSet seed{};
};

}  // namespace gpnum
