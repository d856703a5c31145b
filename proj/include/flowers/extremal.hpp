#pragma once

// Extremal numbers and extremal constructions for flowers, plus the two
// edge-count inequalities the decomposition machinery leans on.

#include <utility>

#include "flowers/flower_spec.hpp"
#include "flowers/matching.hpp"

namespace flowers {

// Complete multipartite graph with parts as balanced as possible; vertices are
// grouped by residue mod r.
inline Graph turan_graph(int n, int r) {
  if (r < 2 || n < r) throw input_error("need n >= r >= 2");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u % r != v % r) g.add_edge(u, v);
  return g;
}

inline long long turan_edge_count(int n, int r) {
  if (r < 2 || n < r) throw input_error("need n >= r >= 2");
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  long long big = n % r, small_size = n / r;
  total -= big * (small_size + 1) * small_size / 2;
  total -= (r - big) * small_size * (small_size - 1) / 2;
  return total;
}

// Largest edge count of a graph with matching number at most nu and maximum
// degree at most delta.
inline long long chvatal_hanson_f(int nu, int delta) {
  if (nu < 1 || delta < 1) throw input_error("matching and degree caps must be positive");
  return static_cast<long long>(nu) * delta +
         static_cast<long long>(delta / 2) * (nu / ((delta + 1) / 2));
}

// Threshold for k triangles through one vertex; equals the edge cap for
// neighborhoods with matching number and maximum degree both below k.
inline long long g_of_k(int k) {
  if (k < 1) throw input_error("petal count must be positive");
  if (k % 2 == 1) return static_cast<long long>(k) * k - k;
  return static_cast<long long>(k) * k - 3 * k / 2;
}

// floor(n^2/4) + (k-1)^2. Total on purpose: exact only for hosts large
// relative to the flower, and small-n truth is the oracle's job.
inline long long ex_formula(int n, const FlowerSpec& spec) {
  long long k1 = spec.k() - 1;
  return static_cast<long long>(n) * n / 4 + k1 * k1;
}

// Extremal members are a balanced complete bipartite graph with a small block
// planted inside one side. Part 0 holds vertices [0, family_split(n)), part 1
// the rest; the block sits on the lowest ids of its part.
constexpr int family_split(int n) { return (n + 1) / 2; }

struct ExtremalFamilyVariant {
  enum Tag { BipartiteBlock, ThreeTriangles };
  Tag tag = BipartiteBlock;
  int side = 0;  // which partite set hosts the block
  constexpr ExtremalFamilyVariant(Tag tag = BipartiteBlock, int side = 0)
      : tag(tag), side(side) {}
};

inline Graph build_family_member(int n, const FlowerSpec& spec,
                                 ExtremalFamilyVariant variant = {}) {
  if (n < 0) throw input_error("order must be nonnegative");
  if (variant.side != 0 && variant.side != 1) throw input_error("side must be 0 or 1");
  int split = family_split(n);
  int base = variant.side == 0 ? 0 : split;
  int host_size = variant.side == 0 ? split : n - split;
  int k = spec.k();
  Graph g(n);
  for (int a = 0; a < split; ++a)
    for (int b = split; b < n; ++b) g.add_edge(a, b);
  if (variant.tag == ExtremalFamilyVariant::BipartiteBlock) {
    if (2 * (k - 1) > host_size)
      throw input_error("hosting side too small for the complete bipartite block");
    for (int u = 0; u < k - 1; ++u)
      for (int v = k - 1; v < 2 * (k - 1); ++v) g.add_edge(base + u, base + v);
  } else {
    if (spec.s != 3 || spec.t != 1)
      throw input_error("triangle block variant needs three triangles and one long cycle");
    if (9 > host_size) throw input_error("hosting side too small for the triangle block");
    for (int c = 0; c < 3; ++c) {
      g.add_edge(base + 3 * c, base + 3 * c + 1);
      g.add_edge(base + 3 * c, base + 3 * c + 2);
      g.add_edge(base + 3 * c + 1, base + 3 * c + 2);
    }
  }
  return g;
}

// Extremal construction for k triangles through one vertex: balanced complete
// bipartite plus a block with matching number, maximum degree, and edge count
// pinned at k-1, k-1, g(k). Odd k plants two complete graphs K_k; even k
// plants a near-regular graph on 2k-1 vertices (a circulant raised by chords,
// leaving one vertex a degree short).
inline Graph build_theorem1_extremal(int n, int k) {
  if (k < 1) throw input_error("petal count must be positive");
  if (n < 0) throw input_error("order must be nonnegative");
  int split = family_split(n);
  int block_size = (k % 2 == 1) ? 2 * k : 2 * k - 1;
  if (block_size > split) throw input_error("side too small for the block");
  Graph g(n);
  for (int a = 0; a < split; ++a)
    for (int b = split; b < n; ++b) g.add_edge(a, b);
  if (k % 2 == 1) {
    for (int c = 0; c < 2 * k; c += k)
      for (int u = c; u < c + k; ++u)
        for (int v = u + 1; v < c + k; ++v) g.add_edge(u, v);
  } else {
    int d = k - 1, m = 2 * k - 1;
    for (int off = 1; off <= (d - 1) / 2; ++off)
      for (int v = 0; v < m; ++v) g.add_edge(v, (v + off) % m);
    for (int i = 0; i < d; ++i) g.add_edge(i, i + d);
  }
  if (k >= 2) {
    VertexSet block_mask(n);
    for (int v = 0; v < block_size; ++v) block_mask.set(v);
    Graph block = induced_subgraph(g, block_mask).first;
    int delta = 0;
    for (int v = 0; v < block.order(); ++v) delta = std::max(delta, block.degree(v));
    if (delta != k - 1 || matching_number(block) != k - 1 ||
        static_cast<long long>(block.edges().size()) != g_of_k(k))
      throw internal_error("planted block missed its parameters");
  }
  return g;
}

// sum over vertices of min(deg, b) <= nu * (maxdeg + b), for 0 <= b <= maxdeg-2.
inline bool lemma2_bound_holds(const Graph& g, int b) {
  int delta = 0;
  for (int v = 0; v < g.order(); ++v) delta = std::max(delta, g.degree(v));
  if (b < 0 || b > delta - 2)
    throw input_error("b must lie between 0 and maxdeg-2");
  long long lhs = 0;
  for (int v = 0; v < g.order(); ++v) lhs += std::min(g.degree(v), b);
  return lhs <= static_cast<long long>(matching_number(g)) * (delta + b);
}

// Hypothesis of the sparse-neighborhood edge bound: true iff the matching
// number stays within k-1 and every vertex of degree at least s keeps
// deg(x) + nu(G - N(x)) within k-1. Graphs satisfying it have at most (k-1)^2
// edges.
inline bool lemma7_hypothesis_holds(const Graph& g, int s, int t) {
  if (s < 0 || t < 1) throw input_error("need s >= 0 and t >= 1");
  if (isolated_vertex_count(g) > 0) throw input_error("graph has an isolated vertex");
  int k = s + t;
  if (matching_number(g) > k - 1) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (g.degree(x) < s) continue;
    VertexSet keep = g.full_set();
    keep.subtract(g.neighbors(x));
    keep.set(x);
    if (g.degree(x) + matching_number_in(g, keep) > k - 1) return false;
  }
  return true;
}

}  // namespace flowers
