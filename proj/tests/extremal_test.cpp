#include <catch2/catch_amalgamated.hpp>

#include "flowers/extremal.hpp"
#include "flowers/flower_search.hpp"
#include "test_support.hpp"

using namespace flowers;
using namespace testsupport;

TEST_CASE("turan edge counts", "[extremal]") {
  CHECK(turan_edge_count(10, 2) == 25);
  CHECK(turan_edge_count(10, 3) == 33);
  CHECK(turan_edge_count(7, 2) == 12);
  CHECK(turan_edge_count(30, 2) == 225);
  CHECK(turan_edge_count(9, 3) == 27);
  CHECK(turan_edge_count(5, 5) == 10);  // r = n gives the complete graph
  CHECK(turan_edge_count(6, 6) == 15);
  CHECK_THROWS_AS(turan_edge_count(6, 1), input_error);
  CHECK_THROWS_AS(turan_edge_count(1, 2), input_error);
  CHECK_THROWS_AS(turan_edge_count(-1, 2), input_error);
  CHECK_THROWS_AS(turan_edge_count(5, 0), input_error);
}

TEST_CASE("turan graph structure", "[extremal]") {
  Graph t = turan_graph(10, 3);
  CHECK(t.order() == 10);
  CHECK(static_cast<int>(t.edges().size()) == 33);
  // parts are residue classes mod r: no edge inside a class, every edge across
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) CHECK(t.has_edge(u, v) == (u % 3 != v % 3));
  CHECK(t.degree(0) == 6);  // class {0,3,6,9} has 4 vertices
  CHECK(t.degree(1) == 7);

  Graph b = turan_graph(7, 2);
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) CHECK(b.has_edge(u, v) == (u % 2 != v % 2));

  for (int r = 2; r <= 6; ++r)
    for (int n = r; n <= 25; ++n)
      CHECK(static_cast<int>(turan_graph(n, r).edges().size()) == turan_edge_count(n, r));

  CHECK_THROWS_AS(turan_graph(5, 6), input_error);
  CHECK_THROWS_AS(turan_graph(5, 1), input_error);
}

TEST_CASE("matching-degree edge bound", "[extremal]") {
  CHECK(chvatal_hanson_f(3, 2) == 9);
  CHECK(chvatal_hanson_f(3, 3) == 10);
  CHECK(chvatal_hanson_f(1, 1) == 1);
  CHECK(chvatal_hanson_f(2, 3) == 7);
  CHECK(chvatal_hanson_f(4, 2) == 12);
  CHECK(chvatal_hanson_f(2, 4) == 10);
  CHECK(chvatal_hanson_f(1, 5) == 5);
  CHECK_THROWS_AS(chvatal_hanson_f(0, 5), input_error);
  CHECK_THROWS_AS(chvatal_hanson_f(5, 0), input_error);
  CHECK_THROWS_AS(chvatal_hanson_f(-1, 2), input_error);
  CHECK_THROWS_AS(chvatal_hanson_f(2, -1), input_error);

  for (int nu = 1; nu <= 8; ++nu)
    for (int delta = 1; delta <= 8; ++delta) CHECK(chvatal_hanson_f(nu, delta) <= nu * (delta + 1));
}

TEST_CASE("edge bound holds on random graphs and is tight on witnesses", "[extremal]") {
  std::mt19937 rng(61803);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.5, rng);
    int m = static_cast<int>(g.edges().size());
    if (m == 0) continue;
    int delta = 0;
    for (int v = 0; v < n; ++v) delta = std::max(delta, g.degree(v));
    CHECK(m <= chvatal_hanson_f(brute_matching_number(g), delta));
  }

  // equality witnesses
  Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK(static_cast<int>(two_triangles.edges().size()) == chvatal_hanson_f(2, 2));

  CHECK(static_cast<int>(complete_graph(5).edges().size()) == chvatal_hanson_f(2, 4));

  // K_{3,3} with one edge subdivided: nu=3, max degree 3, 10 edges
  Graph sub = Graph::from_edges(7, complete_bipartite(3, 3).edges());
  REQUIRE(sub.remove_edge(0, 3));
  sub.add_edge(0, 6);
  sub.add_edge(6, 3);
  CHECK(static_cast<int>(sub.edges().size()) == 10);
  CHECK(brute_matching_number(sub) == 3);
  CHECK(static_cast<int>(sub.edges().size()) == chvatal_hanson_f(3, 3));
}

TEST_CASE("triangle-star threshold g", "[extremal]") {
  CHECK(g_of_k(1) == 0);
  CHECK(g_of_k(2) == 1);
  CHECK(g_of_k(3) == 6);
  CHECK(g_of_k(4) == 10);
  CHECK(g_of_k(5) == 20);
  CHECK(g_of_k(6) == 27);
  CHECK(g_of_k(7) == 42);
  CHECK(g_of_k(8) == 52);
  CHECK_THROWS_AS(g_of_k(0), input_error);

  for (int k = 2; k <= 12; ++k) CHECK(g_of_k(k) == chvatal_hanson_f(k - 1, k - 1));
}

TEST_CASE("extremal number formula", "[extremal]") {
  CHECK(ex_formula(100, spec_new(1, 1, {5})) == 2501);
  CHECK(ex_formula(100, spec_new(0, 2, {5, 5})) == 2501);
  CHECK(ex_formula(100, spec_new(3, 1, {5})) == 2509);
  CHECK(ex_formula(10, spec_new(0, 1, {5})) == 25);
  CHECK(ex_formula(9, spec_new(0, 2, {5, 5})) == 21);
  CHECK(ex_formula(21, spec_new(1, 1, {5})) == 111);

  // total formula, even below the asymptotic range where it stops being exact
  CHECK(ex_formula(4, spec_new(0, 1, {5})) == 4);
  CHECK(ex_formula(6, spec_new(1, 1, {5})) == 10);
  CHECK(ex_formula(8, spec_new(0, 2, {5, 5})) == 17);
}

TEST_CASE("extremal family member shape", "[extremal]") {
  FlowerSpec h11 = spec_new(1, 1, {5});
  Graph f = build_family_member(20, h11);
  CHECK(f.order() == 20);
  CHECK(static_cast<int>(f.edges().size()) == 101);
  CHECK(static_cast<int>(f.edges().size()) == ex_formula(20, h11));
  CHECK(family_split(20) == 10);

  // every cross pair present, inside edges only within the block
  int cross = 0;
  for (int a = 0; a < 10; ++a)
    for (int b = 10; b < 20; ++b) {
      CHECK(f.has_edge(a, b));
      ++cross;
    }
  CHECK(cross == 100);
  VertexSet side_a(20);
  for (int v = 0; v < 10; ++v) side_a.set(v);
  auto [inside, map] = induced_subgraph(f, side_a);
  CHECK(static_cast<int>(inside.edges().size()) == 1);
  CHECK(inside.has_edge(0, 1));
  VertexSet side_b(20);
  for (int v = 10; v < 20; ++v) side_b.set(v);
  CHECK(static_cast<int>(induced_subgraph(f, side_b).first.edges().size()) == 0);

  CHECK(static_cast<int>(build_family_member(21, h11).edges().size()) == 111);
}

TEST_CASE("extremal family variants", "[extremal]") {
  FlowerSpec h31 = spec_new(3, 1, {5});

  Graph bip = build_family_member(20, h31, ExtremalFamilyVariant::BipartiteBlock);
  CHECK(static_cast<int>(bip.edges().size()) == 109);
  VertexSet side_a(20);
  for (int v = 0; v < 10; ++v) side_a.set(v);
  Graph bip_block = induced_subgraph(bip, side_a).first;
  CHECK(static_cast<int>(bip_block.edges().size()) == 9);
  CHECK(component_count(bip_block) == 5);  // K_{3,3} plus four untouched vertices
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) CHECK(bip_block.has_edge(u, v));

  Graph tri = build_family_member(20, h31, ExtremalFamilyVariant::ThreeTriangles);
  CHECK(static_cast<int>(tri.edges().size()) == 109);
  Graph tri_block = induced_subgraph(tri, side_a).first;
  CHECK(static_cast<int>(tri_block.edges().size()) == 9);
  CHECK(component_count(tri_block) == 4);  // three triangles plus one untouched vertex
  for (int c = 0; c < 3; ++c) {
    CHECK(tri_block.has_edge(3 * c, 3 * c + 1));
    CHECK(tri_block.has_edge(3 * c, 3 * c + 2));
    CHECK(tri_block.has_edge(3 * c + 1, 3 * c + 2));
  }

  CHECK(static_cast<int>(build_family_member(17, h31, ExtremalFamilyVariant::ThreeTriangles)
                             .edges()
                             .size()) == 81);

  // block capacity limits
  CHECK_THROWS_AS(build_family_member(16, h31, ExtremalFamilyVariant::ThreeTriangles), input_error);
  CHECK_THROWS_AS(build_family_member(10, h31), input_error);
  CHECK(static_cast<int>(build_family_member(11, h31).edges().size()) == 39);
  CHECK(static_cast<int>(build_family_member(12, h31).edges().size()) == 45);
  // triangle variant exists only at three triangles plus one long cycle
  CHECK_THROWS_AS(build_family_member(20, spec_new(1, 1, {5}), ExtremalFamilyVariant::ThreeTriangles),
                  input_error);
  CHECK_THROWS_AS(build_family_member(20, spec_new(2, 1, {5}), ExtremalFamilyVariant::ThreeTriangles),
                  input_error);
  CHECK(static_cast<int>(build_family_member(18, spec_new(3, 1, {7}),
                                             ExtremalFamilyVariant::ThreeTriangles)
                             .edges()
                             .size()) == 90);

  // the block can be hosted by either partite set
  Graph flip = build_family_member(21, h31, {ExtremalFamilyVariant::BipartiteBlock, 1});
  CHECK(static_cast<int>(flip.edges().size()) == ex_formula(21, h31));
  VertexSet low(21), high(21);
  for (int v = 0; v < 11; ++v) low.set(v);
  for (int v = 11; v < 21; ++v) high.set(v);
  CHECK(static_cast<int>(induced_subgraph(flip, low).first.edges().size()) == 0);
  Graph flip_block = induced_subgraph(flip, high).first;
  CHECK(static_cast<int>(flip_block.edges().size()) == 9);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) CHECK(flip_block.has_edge(u, v));
  CHECK_THROWS_AS(build_family_member(11, h31, {ExtremalFamilyVariant::BipartiteBlock, 1}),
                  input_error);  // smaller part has only 5 slots
  CHECK_THROWS_AS(build_family_member(20, h31, {ExtremalFamilyVariant::BipartiteBlock, 2}),
                  input_error);
}

TEST_CASE("family members avoid their flower", "[extremal]") {
  struct Case {
    int n;
    FlowerSpec spec;
    ExtremalFamilyVariant variant;
  };
  std::vector<Case> cases = {
      {20, spec_new(1, 1, {5}), ExtremalFamilyVariant::BipartiteBlock},
      {20, spec_new(0, 2, {5, 5}), ExtremalFamilyVariant::BipartiteBlock},
      {20, spec_new(2, 1, {5}), ExtremalFamilyVariant::BipartiteBlock},
      {20, spec_new(3, 1, {5}), ExtremalFamilyVariant::BipartiteBlock},
      {20, spec_new(3, 1, {5}), ExtremalFamilyVariant::ThreeTriangles},
      {18, spec_new(3, 1, {7}), ExtremalFamilyVariant::ThreeTriangles},
      {17, spec_new(1, 1, {7}), ExtremalFamilyVariant::BipartiteBlock},
  };
  for (const auto& c : cases) {
    Graph g = build_family_member(c.n, c.spec, c.variant);
    auto res = contains_flower(g, c.spec);
    INFO(c.spec.format() << " on " << c.n << " vertices");
    CHECK(res.outcome == SearchOutcome::Free);
  }

  // one extra edge outside the block creates a copy
  Graph g = build_family_member(20, spec_new(1, 1, {5}));
  g.add_edge(2, 3);
  auto res = contains_flower(g, spec_new(1, 1, {5}));
  REQUIRE(res.outcome == SearchOutcome::Found);
  CHECK(verify_embedding(g, spec_new(1, 1, {5}), *res.embedding));
}

TEST_CASE("triangle-star extremal construction", "[extremal]") {
  CHECK(static_cast<int>(build_theorem1_extremal(30, 3).edges().size()) == 231);
  CHECK(static_cast<int>(build_theorem1_extremal(30, 2).edges().size()) == 226);
  CHECK(static_cast<int>(build_theorem1_extremal(30, 4).edges().size()) == 235);
  CHECK(static_cast<int>(build_theorem1_extremal(31, 5).edges().size()) == 260);

  for (int k = 2; k <= 6; ++k) {
    int n = 30;
    Graph g = build_theorem1_extremal(n, k);
    CHECK(static_cast<int>(g.edges().size()) == n * n / 4 + g_of_k(k));

    int block_size = (k % 2 == 1) ? 2 * k : 2 * k - 1;
    VertexSet block_mask(n);
    for (int v = 0; v < block_size; ++v) block_mask.set(v);
    Graph block = induced_subgraph(g, block_mask).first;
    int delta = 0;
    for (int v = 0; v < block.order(); ++v) delta = std::max(delta, block.degree(v));
    CHECK(delta == k - 1);
    CHECK(matching_number(block) == k - 1);
    CHECK(static_cast<int>(block.edges().size()) == g_of_k(k));

    // nothing else inside either side
    VertexSet side_a(n), side_b(n);
    for (int v = 0; v < family_split(n); ++v) side_a.set(v);
    for (int v = family_split(n); v < n; ++v) side_b.set(v);
    CHECK(static_cast<int>(induced_subgraph(g, side_a).first.edges().size()) == g_of_k(k));
    CHECK(static_cast<int>(induced_subgraph(g, side_b).first.edges().size()) == 0);
  }

  // two disjoint complete blocks when k is odd
  Graph g5 = build_theorem1_extremal(40, 5);
  VertexSet mask(40);
  for (int v = 0; v < 10; ++v) mask.set(v);
  Graph block = induced_subgraph(g5, mask).first;
  CHECK(component_count(block) == 2);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(block.has_edge(u, v));

  CHECK_THROWS_AS(build_theorem1_extremal(30, 0), input_error);
  CHECK_THROWS_AS(build_theorem1_extremal(5, 4), input_error);  // block does not fit the side
}

TEST_CASE("degree-sum matching inequality", "[extremal]") {
  Graph pet = petersen_graph();
  CHECK(lemma2_bound_holds(pet, 0));
  CHECK(lemma2_bound_holds(pet, 1));
  CHECK_THROWS_AS(lemma2_bound_holds(pet, 2), input_error);
  CHECK_THROWS_AS(lemma2_bound_holds(pet, -1), input_error);

  // equality at a star: sum min(deg,b) = delta + b at b = delta - 2
  Graph star = complete_bipartite(1, 4);
  CHECK(lemma2_bound_holds(star, 2));

  Graph c5 = cycle_graph(5);
  CHECK(lemma2_bound_holds(c5, 0));
  CHECK_THROWS_AS(lemma2_bound_holds(c5, 1), input_error);
  CHECK_THROWS_AS(lemma2_bound_holds(make_graph(3, {}), 0), input_error);  // max degree below 2

  std::mt19937 rng(271828);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.45, rng);
    int delta = 0;
    for (int v = 0; v < n; ++v) delta = std::max(delta, g.degree(v));
    for (int b = 0; b + 2 <= delta; ++b) {
      CHECK(lemma2_bound_holds(g, b));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("sparse-neighborhood hypothesis", "[extremal]") {
  CHECK(lemma7_hypothesis_holds(complete_bipartite(1, 1), 1, 1));
  CHECK(lemma7_hypothesis_holds(complete_bipartite(2, 2), 2, 1));
  CHECK(lemma7_hypothesis_holds(complete_bipartite(3, 3), 3, 1));
  CHECK(lemma7_hypothesis_holds(complete_bipartite(3, 3), 1, 3));
  CHECK(lemma7_hypothesis_holds(complete_bipartite(3, 3), 2, 2));

  Graph three_triangles = disjoint_union(disjoint_union(cycle_graph(3), cycle_graph(3)), cycle_graph(3));
  CHECK(lemma7_hypothesis_holds(three_triangles, 3, 1));  // degree 2 vertices escape the local test
  CHECK_FALSE(lemma7_hypothesis_holds(three_triangles, 1, 3));
  CHECK_FALSE(lemma7_hypothesis_holds(three_triangles, 2, 2));

  // oversized matchings and dense neighborhoods disqualify; isolated vertices are rejected outright
  CHECK_FALSE(lemma7_hypothesis_holds(disjoint_union(complete_graph(2), complete_graph(2)), 1, 1));
  CHECK_FALSE(lemma7_hypothesis_holds(complete_bipartite(2, 2), 1, 1));  // nu = k
  CHECK_FALSE(lemma7_hypothesis_holds(complete_bipartite(3, 3), 1, 1));
  CHECK_FALSE(lemma7_hypothesis_holds(complete_graph(4), 2, 1));
  CHECK_THROWS_AS(lemma7_hypothesis_holds(make_graph(3, {{0, 1}}), 1, 1), input_error);
  CHECK_THROWS_AS(lemma7_hypothesis_holds(make_graph(3, {}), 0, 1), input_error);

  CHECK(lemma7_hypothesis_holds(make_graph(0, {}), 0, 1));

  // whenever the hypothesis holds the edge count stays within (k-1)^2
  std::mt19937 rng(141421);
  std::vector<std::pair<int, int>> st_pairs = {{1, 1}, {2, 1}, {3, 1}, {1, 2}};
  int held = 0;
  for (int iter = 0; iter < 300; ++iter) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.35, rng);
    if (isolated_vertex_count(g) > 0) continue;
    for (auto [s, t] : st_pairs) {
      if (!lemma7_hypothesis_holds(g, s, t)) continue;
      ++held;
      int k = s + t;
      CHECK(static_cast<int>(g.edges().size()) <= (k - 1) * (k - 1));
    }
  }
  CHECK(held > 20);
}
