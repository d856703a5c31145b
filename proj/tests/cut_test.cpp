#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "flowers/cut.hpp"
#include "test_support.hpp"

using namespace flowers;
namespace ts = testsupport;

TEST_CASE("exact max cut on named graphs", "[cut]") {
  CHECK(exact_max_cut(ts::complete_graph(4)).cross_edges() == 4);
  CHECK(exact_max_cut(ts::cycle_graph(5)).cross_edges() == 4);
  CHECK(exact_max_cut(ts::complete_bipartite(3, 3)).cross_edges() == 9);
  CHECK(exact_max_cut(ts::petersen_graph()).cross_edges() == 12);
  CHECK(exact_max_cut(Graph(3)).cross_edges() == 0);
}

TEST_CASE("exact max cut agrees with the assignment scan", "[cut]") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = ts::random_graph(n, 0.5, rng);
    auto cut = exact_max_cut(g);
    CHECK(cut.cross_edges() == ts::brute_max_cut(g));
    CHECK(cut.in_edges(0) + cut.in_edges(1) + cut.cross_edges() == g.size());
  }
}

TEST_CASE("exact max cut refuses large orders", "[cut]") {
  CHECK_THROWS_AS(exact_max_cut(Graph(21)), cap_error);
  CHECK_NOTHROW(exact_max_cut(Graph(20)));
}

TEST_CASE("local max cut is a one-swap local optimum", "[cut]") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5 + static_cast<int>(rng() % 30);
    Graph g = ts::random_graph(n, 0.4, rng);
    auto cut = local_max_cut(g, trial);
    CHECK(cut.in_edges(0) + cut.in_edges(1) + cut.cross_edges() == g.size());
    // No single vertex move may add cross edges.
    for (int v = 0; v < n; ++v) {
      int same = 0, cross = 0;
      g.neighbors(v).for_each([&](int w) {
        if (cut.side(w) == cut.side(v)) ++same;
        else ++cross;
      });
      CHECK(same <= cross);
    }
    if (n <= 13) CHECK(cut.cross_edges() <= ts::brute_max_cut(g));
  }
}

TEST_CASE("local max cut is deterministic in the seed", "[cut]") {
  std::mt19937 rng(5);
  Graph g = ts::random_graph(24, 0.3, rng);
  auto a = local_max_cut(g, 42);
  auto b = local_max_cut(g, 42);
  REQUIRE(a.side_mask() == b.side_mask());
  auto c = local_max_cut(g, 43);  // different seed may land elsewhere; only sanity-check it
  CHECK(c.cross_edges() >= 0);
}

TEST_CASE("cut state reports in-part degrees", "[cut]") {
  // Natural bipartition of K_{2,2} plus one in-part edge.
  Graph g = ts::make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 1}});
  VertexSet side1(4);
  side1.set(2);
  side1.set(3);
  CutState cut(g, side1);
  CHECK(cut.cross_edges() == 4);
  CHECK(cut.in_edges(0) == 1);
  CHECK(cut.in_edges(1) == 0);
  CHECK(cut.in_degree(0) == 1);
  CHECK(cut.in_degree(2) == 0);
  CHECK(cut.out_degree(0) == 2);
  CHECK(cut.side(0) == 0);
  CHECK(cut.side(3) == 1);
}
