#include <catch2/catch_amalgamated.hpp>

#include "flowers/graph.hpp"
#include "test_support.hpp"

using namespace flowers;
namespace ts = testsupport;

TEST_CASE("graph construction and edge ops", "[graph]") {
  Graph g(5);
  REQUIRE(g.order() == 5);
  REQUIRE(g.size() == 0);
  CHECK(g.add_edge(0, 3));
  CHECK(g.add_edge(3, 1));
  CHECK_FALSE(g.add_edge(1, 3));  // duplicate is a no-op
  CHECK(g.size() == 2);
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.degree(3) == 2);
  CHECK(g.remove_edge(0, 3));
  CHECK_FALSE(g.remove_edge(0, 3));
  CHECK(g.size() == 1);

  CHECK_THROWS_AS(g.add_edge(2, 2), input_error);
  CHECK_THROWS_AS(g.add_edge(0, 5), input_error);
  CHECK_THROWS_AS(Graph(-1), input_error);
}

TEST_CASE("edges are reported sorted", "[graph]") {
  Graph g = ts::make_graph(4, {{2, 3}, {0, 1}, {1, 3}});
  auto es = g.edges();
  REQUIRE(es.size() == 3);
  CHECK(es[0].u == 0);
  CHECK(es[0].v == 1);
  CHECK(es[1].u == 1);
  CHECK(es[1].v == 3);
  CHECK(es[2].u == 2);
  CHECK(es[2].v == 3);
}

TEST_CASE("component count", "[graph]") {
  CHECK(component_count(Graph(5)) == 5);
  CHECK(component_count(Graph(0)) == 0);
  auto g = ts::disjoint_union(ts::cycle_graph(5), ts::complete_graph(2));
  CHECK(component_count(g) == 2);
  auto three_triangles =
      ts::disjoint_union(ts::disjoint_union(ts::cycle_graph(3), ts::cycle_graph(3)),
                         ts::cycle_graph(3));
  CHECK(component_count(three_triangles) == 3);
  CHECK(isolated_vertex_count(ts::disjoint_union(ts::cycle_graph(3), Graph(2))) == 2);
}

TEST_CASE("induced subgraph relabels and maps back", "[graph]") {
  Graph k5 = ts::complete_graph(5);
  VertexSet keep(5);
  keep.set(0);
  keep.set(2);
  keep.set(4);
  auto [h, map] = induced_subgraph(k5, keep);
  CHECK(h.order() == 3);
  CHECK(h.size() == 3);
  REQUIRE(map.size() == 3);
  CHECK(map[0] == 0);
  CHECK(map[1] == 2);
  CHECK(map[2] == 4);
}

TEST_CASE("restricted edge set keeps only edges meeting the neighborhood", "[graph]") {
  // Path 0-1-2-3 plus an extra vertex 4 adjacent to 1 only.
  Graph g = ts::make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  VertexSet a(5);
  for (int v = 0; v < 4; ++v) a.set(v);
  auto es = restricted_edge_set(g, a, 4);
  REQUIRE(es.size() == 2);
  CHECK(es[0].u == 0);
  CHECK(es[0].v == 1);
  CHECK(es[1].u == 1);
  CHECK(es[1].v == 2);

  // With A = V the probe's own edge 1-4 qualifies too; 2-3 misses N(4) = {1}.
  VertexSet all(5);
  for (int v = 0; v < 5; ++v) all.set(v);
  auto es2 = restricted_edge_set(g, all, 4);
  CHECK(es2.size() == 3);
}

TEST_CASE("vertex set basics", "[graph]") {
  VertexSet s(70);
  s.set(0);
  s.set(63);
  s.set(64);
  s.set(69);
  CHECK(s.count() == 4);
  CHECK(s.test(64));
  s.reset(64);
  CHECK_FALSE(s.test(64));
  auto v = s.to_vector();
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 0);
  CHECK(v[1] == 63);
  CHECK(v[2] == 69);
  VertexSet t(70);
  t.set(63);
  CHECK(t.subset_of(s));
  CHECK(s.intersects(t));
  t.set(5);
  CHECK_FALSE(t.subset_of(s));
}
