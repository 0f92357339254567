#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpnum/bits.hpp"

namespace gpnum {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Largest supported order.
inline constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

/// Canonical vertex subset: strictly increasing, duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  /// Sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
/// both as sorted neighbor lists and as a bit matrix for O(1) membership.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of the given order.
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Loops and out-of-range endpoints are
  /// input errors; repeated edges collapse. `labels` is empty or has n entries.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return bits::test(row(u), v);
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  /// Adjacency row of `v` as a bitset of `words()` words.
  std::span<const bits::Word> row(Vertex v) const {
    return {matrix_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words() const { return words_; }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of `v`, or its decimal id when the graph is unlabeled.
  std::string label(Vertex v) const;

  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<bits::Word> matrix_;
  std::vector<std::string> labels_;
};

/// Shortest-path distance. Unreachable pairs carry the infinite value, which
/// absorbs addition and never equals a finite distance.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : raw_(hops) {}

  static constexpr Distance infinite() {
    Distance d;
    d.raw_ = kInfRaw;
    return d;
  }

  constexpr bool finite() const { return raw_ != kInfRaw; }
  /// Hop count; only meaningful when finite().
  constexpr std::uint32_t hops() const { return raw_; }

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (!a.finite() || !b.finite()) return infinite();
    return Distance(a.raw_ + b.raw_);
  }
  friend constexpr bool operator==(Distance, Distance) = default;
  friend constexpr auto operator<=>(Distance a, Distance b) { return a.raw_ <=> b.raw_; }

 private:
  static constexpr std::uint32_t kInfRaw = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t raw_ = 0;
};

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, Distance::infinite()) {}

  std::size_t order() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  Distance& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

/// All-pairs distances by one breadth-first search per source.
DistanceMatrix distances(const Graph& g);

/// Largest finite distance of a connected graph; infinite when disconnected.
/// Graphs with at most one vertex have diameter 0.
Distance diameter(const Graph& g);
Distance diameter(const DistanceMatrix& dm);

bool is_connected(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced by `s`, relabeled 0..|s|-1 in the order of `s`.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Components sorted by their smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Throws InputError unless every member of `s` is a vertex of a graph of
/// order n.
void require_in_range(const VertexSet& s, std::size_t n);

}  // namespace gpnum
