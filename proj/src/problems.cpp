#include "problems.hpp"

namespace gpnum::detail {

namespace {

// Adjacency rows renumbered into rank space.
std::vector<bits::Word> ranked_adjacency(const Graph& g, const std::vector<Vertex>& original,
                                         const std::vector<Vertex>& rank_of) {
  const std::size_t n = g.order(), w = bits::words_for(n);
  std::vector<bits::Word> rows(n * w, 0);
  for (Vertex r = 0; r < n; ++r)
    for (Vertex u : g.neighbors(original[r])) bits::set({rows.data() + r * w, w}, rank_of[u]);
  return rows;
}

std::vector<Vertex> inverse(const std::vector<Vertex>& original) {
  std::vector<Vertex> rank_of(original.size());
  for (Vertex r = 0; r < original.size(); ++r) rank_of[original[r]] = r;
  return rank_of;
}

}  // namespace

bool collinear(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c) {
  const Distance ab = dm(a, b), ac = dm(a, c), bc = dm(b, c);
  if (!ab.finite() || !ac.finite() || !bc.finite()) return false;
  return ab == ac + bc || ac == ab + bc || bc == ab + ac;
}

Problem clique_problem(const Graph& g) {
  Problem p{ForbiddenStructure(g.order()), degree_order(g)};
  const auto& orig = p.original;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (!g.adjacent(orig[a], orig[b])) p.structure.forbid_pair(a, b);
  return p;
}

Problem cluster_problem(const Graph& g) {
  Problem p{ForbiddenStructure(g.order()), degree_order(g)};
  const std::size_t n = g.order(), w = bits::words_for(n);
  const auto adj = ranked_adjacency(g, p.original, inverse(p.original));
  std::vector<bits::Word> row(w);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      const bits::Word* na = adj.data() + a * w;
      const bits::Word* nb = adj.data() + b * w;
      const bool ab = bits::test({na, w}, b);
      // adjacent pair: a third vertex seeing exactly one end; otherwise: both ends
      for (std::size_t k = 0; k < w; ++k) row[k] = ab ? (na[k] ^ nb[k]) : (na[k] & nb[k]);
      bits::reset(row, a);
      bits::reset(row, b);
      p.structure.set_triple_row(a, b, row);
    }
  return p;
}

Problem general_position_problem(const Graph& g, const DistanceMatrix& dm) {
  Problem p{ForbiddenStructure(g.order()), degree_order(g)};
  const std::size_t n = g.order(), w = bits::words_for(n);
  const auto& orig = p.original;
  std::vector<bits::Word> row(w);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      std::fill(row.begin(), row.end(), 0);
      for (Vertex c = 0; c < n; ++c)
        if (c != a && c != b && collinear(dm, orig[a], orig[b], orig[c])) bits::set(row, c);
      p.structure.set_triple_row(a, b, row);
      p.structure.set_triple_row(b, a, row);
    }
  return p;
}

}  // namespace gpnum::detail
