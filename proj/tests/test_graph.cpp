#include <catch2/catch_amalgamated.hpp>

#include "holeham/generators.hpp"
#include "holeham/graph.hpp"
#include "oracles.hpp"

using namespace holeham;

namespace {

bool symmetric_and_loop_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    for (int v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("VertexSet basics") {
  VertexSet s{1, 4, 63};
  CHECK(s.size() == 3);
  CHECK(s.contains(63));
  CHECK_FALSE(s.contains(0));
  CHECK(s.front() == 1);
  CHECK(s.to_vector() == std::vector<int>{1, 4, 63});
  CHECK((s - VertexSet{4}).size() == 2);
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexSet::range(0).empty());
}

TEST_CASE("Graph construction and queries") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(VertexSet{0, 1}) == VertexSet{2});
  CHECK(g.is_connected());
  CHECK_FALSE(g.is_complete());
  CHECK(g.with_edge(0, 3).size() == 4);
  CHECK(g.induced(VertexSet{1, 2, 3}) == path_graph(3));

  CHECK_THROWS_AS(Graph(65), precondition_error);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), precondition_error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), precondition_error);
  CHECK_NOTHROW(Graph(64));
}

TEST_CASE("join") {
  CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
  CHECK(join(empty_graph(2), empty_graph(2)) == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));

  const Graph fam2 = join(disjoint_union(complete_graph(4), complete_graph(1)), complete_graph(2));
  CHECK(fam2.order() == 7);
  CHECK(fam2 == sharpness2(6));
}

TEST_CASE("disjoint_union") {
  CHECK(disjoint_union(complete_graph(1), complete_graph(1)) == empty_graph(2));
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(two_triangles.order() == 6);
  CHECK(two_triangles.size() == 6);
  CHECK_FALSE(two_triangles.is_connected());

  const Graph fam1 = GraphBuilder(disjoint_union(complete_graph(1), complete_graph(7))).add_edge(0, 1).build();
  CHECK(fam1 == sharpness1(1, 7));
}

TEST_CASE("join and union invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gnp(1 + static_cast<int>(seed % 7), 0.5, seed);
    const Graph h = gnp(1 + static_cast<int>((seed * 5) % 6), 0.4, seed + 1000);
    const Graph j = join(g, h);
    REQUIRE(symmetric_and_loop_free(j));
    CHECK(j.order() == g.order() + h.order());
    CHECK(j.size() == g.size() + h.size() + g.order() * h.order());
    for (int v = 0; v < g.order(); ++v) CHECK(j.degree(v) == g.degree(v) + h.order());
    for (int v = 0; v < h.order(); ++v) CHECK(j.degree(g.order() + v) == h.degree(v) + g.order());
    CHECK(j.induced(VertexSet::range(g.order())) == g);

    const Graph u = disjoint_union(g, h);
    REQUIRE(symmetric_and_loop_free(u));
    CHECK(u.size() == g.size() + h.size());
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < h.order(); ++b) CHECK_FALSE(u.adjacent(a, g.order() + b));
  }
}

TEST_CASE("edge count is half the degree sum for every labeled 5-vertex graph") {
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const Graph g = oracle::graph_from_mask(5, mask);
    REQUIRE(symmetric_and_loop_free(g));
    CHECK(g.size() == std::popcount(mask));
  }
}
