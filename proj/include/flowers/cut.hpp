#pragma once

#include <random>

#include "flowers/graph.hpp"

namespace flowers {

// A two-sided vertex partition with cached edge counts. Counts describe the
// graph as it was at construction; call recount() after mutating it.
class CutState {
 public:
  CutState(const Graph& g, VertexSet side1) : g_(&g), side1_(std::move(side1)) { recount(); }

  int side(int v) const { return side1_.test(v) ? 1 : 0; }

  const VertexSet& side_mask() const { return side1_; }

  VertexSet side_set(int i) const {
    VertexSet s = side1_;
    if (i == 0) {
      VertexSet all = g_->full_set();
      all.subtract(side1_);
      return all;
    }
    return s;
  }

  int cross_edges() const { return e01_; }
  int in_edges(int i) const { return i == 0 ? e00_ : e11_; }

  // Degree of v inside its own side / toward the other side.
  int in_degree(int v) const {
    int same = g_->neighbors(v).count_and(side1_);
    return side(v) == 1 ? same : g_->degree(v) - same;
  }
  int out_degree(int v) const { return g_->degree(v) - in_degree(v); }

  void flip(int v) {
    side1_.assign(v, side(v) == 0);
    recount();
  }

  void recount() {
    e00_ = e11_ = e01_ = 0;
    for (auto e : g_->edges()) {
      int su = side(e.u), sv = side(e.v);
      if (su != sv) ++e01_;
      else if (su == 0) ++e00_;
      else ++e11_;
    }
  }

  const Graph& graph() const { return *g_; }

 private:
  const Graph* g_;
  VertexSet side1_;
  int e00_ = 0, e11_ = 0, e01_ = 0;
};

// Seeded random start, then first-improving single-vertex moves in ascending
// id order until no move strictly increases the cross count.
inline CutState local_max_cut(const Graph& g, std::uint64_t seed) {
  int n = g.order();
  std::mt19937_64 rng(seed);
  VertexSet side1(n);
  for (int v = 0; v < n; ++v)
    if (rng() & 1u) side1.set(v);

  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      int same = g.neighbors(v).count_and(side1);
      if (!side1.test(v)) same = g.degree(v) - same;
      int cross = g.degree(v) - same;
      if (same > cross) {
        side1.assign(v, !side1.test(v));
        moved = true;
      }
    }
  }
  return CutState(g, side1);
}

inline constexpr int kExactMaxCutCap = 20;

// Exhaustive over 2^(n-1) assignments (vertex n-1 pinned to side 0); ties
// break toward the numerically smallest side-1 mask.
inline CutState exact_max_cut(const Graph& g) {
  int n = g.order();
  if (n > kExactMaxCutCap)
    throw cap_error("exact_max_cut supports at most " + std::to_string(kExactMaxCutCap) +
                    " vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> row(n, 0);
  for (auto e : g.edges()) {
    row[e.u] |= 1u << e.v;
    row[e.v] |= 1u << e.u;
  }
  std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1);
  std::uint64_t top = n >= 2 ? (1ull << (n - 1)) : 1;
  int best = -1;
  std::uint32_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    auto m1 = static_cast<std::uint32_t>(mask);
    int cross = 0;
    std::uint32_t side0 = full & ~m1;
    std::uint32_t bits = m1;
    while (bits) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      cross += std::popcount(row[v] & side0);
    }
    if (cross > best) {
      best = cross;
      best_mask = m1;
    }
  }
  VertexSet side1(n);
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1u) side1.set(v);
  return CutState(g, side1);
}

}  // namespace flowers
