#include <doctest.h>

#include <algorithm>
#include <map>

#include "gpnum/constructions.hpp"
#include "gpnum/error.hpp"
#include "oracle.hpp"

using namespace gpnum;

namespace {

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

const std::vector<std::string> kSmall = {"K1", "K2", "K3", "P3", "P4", "C4", "E2", "C5", "P5"};

}  // namespace

TEST_CASE("complete, path, cycle, edgeless") {
  CHECK(complete(1).order() == 1);
  CHECK(complete(1).size() == 0);
  CHECK(complete(4).size() == 6);
  CHECK(complete(2).adjacent(0, 1));
  CHECK_THROWS_AS(complete(0), InputError);
  CHECK(path(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(path(1) == complete(1));
  CHECK_THROWS_AS(path(0), InputError);
  const std::vector<Edge> matching{{0, 2}, {1, 3}};
  CHECK(cycle(4) == complement(Graph::from_edges(4, matching)));
  CHECK_THROWS_AS(cycle(2), InputError);
  CHECK(edgeless(3).size() == 0);
}

TEST_CASE("kneser graphs") {
  SUBCASE("K(5,2) is the Petersen graph") {
    const Graph g = kneser(5, 2);
    CHECK(g.order() == 10);
    CHECK(g.size() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.label(0) == "{1,2}");
    CHECK(g.label(9) == "{4,5}");
  }
  SUBCASE("K(4,2) is 3K2") {
    const Graph g = kneser(4, 2);
    CHECK(g.order() == 6);
    CHECK(g.size() == 3);
    CHECK(connected_components(g).size() == 3);
    const Graph three = disjoint_union(disjoint_union(complete(2), complete(2)), complete(2));
    CHECK(degree_sequence(g) == degree_sequence(three));
  }
  SUBCASE("K(6,3) is 10K2") {
    const Graph g = kneser(6, 3);
    CHECK(g.order() == 20);
    CHECK(g.size() == 10);
    for (const auto& c : connected_components(g)) CHECK(c.size() == 2);
  }
  SUBCASE("vertices follow the lexicographic order of k-subsets") {
    const auto subsets = k_subsets(6, 3);
    REQUIRE(subsets.size() == 20);
    CHECK(subsets.front() == KSubset{1, 2, 3});
    CHECK(subsets.back() == KSubset{4, 5, 6});
    CHECK(std::is_sorted(subsets.begin(), subsets.end()));
    for (std::size_t i = 0; i < subsets.size(); ++i) CHECK(kneser_vertex(6, subsets[i]) == i);
    const Graph g = kneser(6, 3);
    for (Vertex u = 0; u < 20; ++u)
      for (Vertex v = 0; v < 20; ++v) {
        bool disjoint = true;
        for (auto x : subsets[u])
          if (std::find(subsets[v].begin(), subsets[v].end(), x) != subsets[v].end()) disjoint = false;
        CHECK(g.adjacent(u, v) == (u != v && disjoint));
      }
  }
  CHECK_THROWS_AS(kneser(2, 3), InputError);
  CHECK_THROWS_AS(kneser(4, 0), InputError);
  CHECK_THROWS_AS(kneser_vertex(5, {2, 1}), InputError);
}

TEST_CASE("kneser(n,k) is C(n-k,k)-regular") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const Graph g = kneser(n, k);
      CHECK(g.order() == binomial(n, k));
      const std::size_t expect = k <= n - k ? binomial(n - k, k) : 0;
      for (Vertex v = 0; v < g.order(); ++v) CHECK(g.degree(v) == expect);
    }
}

TEST_CASE("cartesian products") {
  const Graph k2k2 = cartesian_product(complete(2), complete(2));
  CHECK(k2k2.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(cartesian_product(path(3), cycle(4)).order() == 12);
  CHECK(cartesian_product(complete(3), path(3)).label(4) == "(1,1)");
}

TEST_CASE("cartesian product distances add coordinatewise") {
  const std::vector<std::string> factors = {"K1", "K2", "K3", "P3", "P4", "C4", "C5", "E2", "union(K2,K1)", "C6"};
  for (const auto& a : factors)
    for (const auto& b : factors) {
      const Graph g = graph_from_expr(a), h = graph_from_expr(b);
      const Graph gh = cartesian_product(g, h);
      const auto dg = oracle::floyd_warshall(g), dh = oracle::floyd_warshall(h);
      const DistanceMatrix d = distances(gh);
      const auto nh = static_cast<Vertex>(h.order());
      for (Vertex u = 0; u < gh.order(); ++u)
        for (Vertex v = 0; v < gh.order(); ++v) {
          const int x = dg[u / nh][v / nh], y = dh[u % nh][v % nh];
          if (x >= oracle::kInf || y >= oracle::kInf)
            CHECK_FALSE(d(u, v).finite());
          else
            CHECK(d(u, v) == Distance(static_cast<std::uint32_t>(x + y)));
        }
    }
}

TEST_CASE("hamming graphs") {
  const std::vector<std::size_t> cube{2, 2, 2};
  const Graph q3 = hamming(cube);
  CHECK(q3.order() == 8);
  CHECK(q3.size() == 12);
  const std::vector<std::size_t> two{3, 4};
  CHECK(hamming(two) == cartesian_product(complete(3), complete(4)));
}

TEST_CASE("joins") {
  CHECK(join(complete(1), complete(1)) == complete(2));
  const Graph k23 = join(edgeless(2), edgeless(3));
  CHECK(k23.size() == 6);
  CHECK_FALSE(k23.adjacent(0, 1));
  CHECK(k23.adjacent(1, 4));
  CHECK(join(complete(2), complete(2)) == complete(4));
}

TEST_CASE("coronas") {
  const Graph p4 = corona(complete(2), complete(1));
  // centers 0, 1 then pendant copies 2 (of 0) and 3 (of 1)
  CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(diameter(p4) == Distance(3));
  CHECK(corona(complete(1), complete(3)) == complete(4));
  const Graph c = corona(path(3), complete(2));
  CHECK(c.order() == 9);
  CHECK(c.size() == 11);
  CHECK_THROWS_AS(corona(Graph(0), complete(2)), InputError);
}

TEST_CASE("corona order and size over small graphs") {
  for (const auto& a : kSmall)
    for (const auto& b : kSmall) {
      const Graph g = graph_from_expr(a), h = graph_from_expr(b);
      if (g.order() > 5 || h.order() > 5) continue;
      const Graph c = corona(g, h);
      CHECK(c.order() == g.order() * (1 + h.order()));
      CHECK(c.size() == g.size() + g.order() * (h.size() + h.order()));
    }
}

TEST_CASE("line graphs") {
  CHECK(line_graph(complete(3)) == complete(3));
  CHECK(line_graph(path(4)) == path(3));
  const Graph oct = line_graph(complete(4));
  CHECK(oct.order() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
  CHECK(oct.label(0) == "{0,1}");
  for (std::size_t n = 3; n <= 8; ++n) {
    const Graph l = line_graph(complete(n));
    CHECK(l.order() == n * (n - 1) / 2);
    for (Vertex v = 0; v < l.order(); ++v) CHECK(l.degree(v) == 2 * (n - 2));
  }
}

TEST_CASE("disjoint unions") {
  const Graph two = disjoint_union(complete(2), complete(2));
  CHECK(two.order() == 4);
  CHECK(two.size() == 2);
  CHECK_FALSE(two.adjacent(1, 2));
  CHECK(disjoint_union(cycle(5), path(3)).order() == 8);
}

TEST_CASE("graph expressions") {
  CHECK(graph_from_expr("K3") == complete(3));
  CHECK(graph_from_expr(" petersen ") == kneser(5, 2));
  CHECK(graph_from_expr("kneser(5,2)") == kneser(5, 2));
  CHECK(graph_from_expr("cart(K3, P3)") == cartesian_product(complete(3), path(3)));
  CHECK(graph_from_expr("corona(K2,P3)") == corona(complete(2), path(3)));
  CHECK(graph_from_expr("complement(C4)") == complement(cycle(4)));
  CHECK(graph_from_expr("complete(4)") == complete(4));
  CHECK(graph_from_expr("line(K4)") == line_graph(complete(4)));
  for (const char* bad : {"", "K", "Q3", "kneser(5)", "cart(K3)", "K3)", "line(3)", "kneser(K2,2)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(graph_from_expr(bad), InputError);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(19, 2) == 171);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK_THROWS_AS(binomial(200, 100), InputError);
}
