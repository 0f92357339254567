#include "gpnum/graph.hpp"

#include <algorithm>

#include "gpnum/error.hpp"

namespace gpnum {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(std::size_t n) : n_(n), words_(bits::words_for(n)), adj_(n), matrix_(n * words_, 0) {
  if (n > kMaxOrder) throw InputError("graph order " + std::to_string(n) + " exceeds 65536");
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  Graph g(n);
  if (!labels.empty() && labels.size() != n)
    throw InputError("label count " + std::to_string(labels.size()) + " does not match order " +
                     std::to_string(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for order " + std::to_string(n));
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v)) continue;
    bits::set({g.matrix_.data() + std::size_t{u} * g.words_, g.words_}, v);
    bits::set({g.matrix_.data() + std::size_t{v} * g.words_, g.words_}, u);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.labels_ = std::move(labels);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_)
    throw InputError("label count does not match order");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

DistanceMatrix distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    dm.at(s, s) = Distance(0);
    while (head < tail) {
      const Vertex u = queue[head++];
      const Distance next = dm(s, u) + Distance(1);
      for (Vertex v : g.neighbors(u)) {
        if (dm(s, v).finite()) continue;
        dm.at(s, v) = next;
        queue[tail++] = v;
      }
    }
  }
  return dm;
}

Distance diameter(const DistanceMatrix& dm) {
  Distance best(0);
  const std::size_t n = dm.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) best = std::max(best, dm(u, v));
  return best;
}

Distance diameter(const Graph& g) { return diameter(distances(g)); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - g.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges, g.labels());
}

void require_in_range(const VertexSet& s, std::size_t n) {
  if (!s.empty() && s.members().back() >= n)
    throw InputError("vertex " + std::to_string(s.members().back()) + " out of range for order " +
                     std::to_string(n));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_in_range(s, g.order());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v : s) labels.push_back(g.labels()[v]);
  return Graph::from_edges(s.size(), edges, std::move(labels));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

}  // namespace gpnum
