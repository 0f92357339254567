#pragma once

// Exact maximum search for vertex subsets that avoid a fixed family of
// forbidden pairs and forbidden triples. Every problem in the library reduces
// to this form:
//   clique            forbidden pairs = non-edges
//   cluster subgraph  forbidden triples = induced paths on three vertices
//   general position  forbidden triples = one vertex on a geodesic of the others
//
// The search is a Tomita-style branch-and-bound: at each node the candidates
// are greedily partitioned into groups that admit at most one vertex (pairwise
// conflicting) or at most two (every triple infeasible), vertices are branched
// from the last group backwards, and a node is cut as soon as the chosen count
// plus the bound of the remaining prefix cannot beat the incumbent.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gpnum/bits.hpp"
#include "gpnum/graph.hpp"
#include "gpnum/search.hpp"

namespace gpnum::detail {

/// Largest order the engine accepts; the triple table is n*n rows.
inline constexpr std::size_t kMaxSearchOrder = 1024;

class ForbiddenStructure {
 public:
  explicit ForbiddenStructure(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }

  void forbid_pair(Vertex a, Vertex b);
  /// Forbids {a, b, c}; a, b, c pairwise distinct.
  void forbid_triple(Vertex a, Vertex b, Vertex c);

  bool has_triples() const { return !triples_.empty(); }

  std::span<const bits::Word> pair_row(Vertex a) const {
    return {pairs_.data() + std::size_t{a} * words_, words_};
  }
  /// Vertices w for which {a, b, w} is forbidden.
  std::span<const bits::Word> triple_row(Vertex a, Vertex b) const {
    return {triples_.data() + (std::size_t{a} * n_ + b) * words_, words_};
  }

  bool pair_forbidden(Vertex a, Vertex b) const { return bits::test(pair_row(a), b); }
  bool triple_forbidden(Vertex a, Vertex b, Vertex c) const {
    return has_triples() && bits::test(triple_row(a, b), c);
  }

  /// Replaces the set of w for which {a, b, w} is forbidden. Callers fill
  /// every ordered pair so the table stays symmetric.
  void set_triple_row(Vertex a, Vertex b, std::span<const bits::Word> row);

  /// True when `s` contains no forbidden pair or triple.
  bool feasible(std::span<const Vertex> s) const;

 private:
  std::span<bits::Word> mutable_pair_row(Vertex a) {
    return {pairs_.data() + std::size_t{a} * words_, words_};
  }
  std::span<bits::Word> mutable_triple_row(Vertex a, Vertex b) {
    return {triples_.data() + (std::size_t{a} * n_ + b) * words_, words_};
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<bits::Word> pairs_;
  std::vector<bits::Word> triples_;  // allocated on first forbid_triple
};

/// The structure is expressed in search ranks: rank i is the i-th vertex of
/// the branching order and stands for original vertex `original[i]`.
struct SearchRequest {
  const ForbiddenStructure* structure = nullptr;
  std::vector<Vertex> original;
  /// Extra condition (over original ids, sorted) a set must meet to be
  /// recorded as incumbent. It is not used for pruning, so it may be
  /// non-hereditary.
  std::function<bool(std::span<const Vertex>)> accept;
  /// Starting incumbent in original ids (may be empty). Must be feasible and
  /// accepted.
  std::vector<Vertex> seed;
  Budget budget;
  BoundKind bound = BoundKind::partition;
};

struct SearchOutcome {
  std::vector<Vertex> best;  // sorted, original vertex ids
  bool complete = false;
  std::uint64_t nodes = 0;
};

SearchOutcome maximum_feasible_subset(const SearchRequest& request);

/// Vertices by descending degree, ties by id.
std::vector<Vertex> degree_order(const Graph& g);

}  // namespace gpnum::detail
