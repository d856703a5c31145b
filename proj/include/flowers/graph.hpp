#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flowers/bitvec.hpp"
#include "flowers/errors.hpp"

namespace flowers {

using VertexSet = Bitvec;

struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

// Simple undirected graph, adjacency kept as one bit row per vertex.
// No loops, no multi-edges; vertex ids are 0-based and dense.
class Graph {
 public:
  Graph() : Graph(0) {}
  explicit Graph(int n) : n_(n) {
    if (n < 0) throw input_error("graph order must be nonnegative");
    rows_.assign(n_, Bitvec(n_));
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto e : edges)
      if (!g.add_edge(e.u, e.v))
        throw input_error("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    return g;
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && rows_[u].test(v);
  }

  // Returns false when the edge is already present.
  bool add_edge(int u, int v) {
    check_pair(u, v);
    if (rows_[u].test(v)) return false;
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
    return true;
  }

  bool remove_edge(int u, int v) {
    check_pair(u, v);
    if (!rows_[u].test(v)) return false;
    rows_[u].reset(v);
    rows_[v].reset(u);
    --m_;
    return true;
  }

  const Bitvec& neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  int degree(int v) const { return neighbors(v).count(); }

  int degree_in(int v, const VertexSet& mask) const { return neighbors(v).count_and(mask); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      rows_[u].for_each([&](int v) {
        if (v > u) out.push_back({u, v});
      });
    return out;
  }

  VertexSet full_set() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex " + std::to_string(v) + " out of range");
  }
  void check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self loop at vertex " + std::to_string(u));
  }

  int n_;
  int m_ = 0;
  std::vector<Bitvec> rows_;
};

inline int component_count(const Graph& g) {
  int n = g.order();
  std::vector<int> stack;
  Bitvec seen(n);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    ++comps;
    seen.set(s);
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      g.neighbors(v).for_each([&](int w) {
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      });
    }
  }
  return comps;
}

inline int isolated_vertex_count(const Graph& g) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) ++c;
  return c;
}

// Subgraph induced by `keep`; second member maps new ids to old ids.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> map = keep.to_vector();
  std::vector<int> back(g.order(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) back[map[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(map.size()));
  for (std::size_t i = 0; i < map.size(); ++i) {
    (g.neighbors(map[i]) & keep).for_each([&](int w) {
      if (back[w] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), back[w]);
    });
  }
  return {std::move(h), std::move(map)};
}

// E_A(x): edges of G[A] with at least one endpoint adjacent to x.
inline std::vector<Edge> restricted_edge_set(const Graph& g, const VertexSet& a, int x) {
  const Bitvec& nx = g.neighbors(x);
  std::vector<Edge> out;
  for (int u = a.next(); u != -1; u = a.next(u + 1)) {
    (g.neighbors(u) & a).for_each([&](int v) {
      if (v > u && (nx.test(u) || nx.test(v))) out.push_back({u, v});
    });
  }
  return out;
}

}  // namespace flowers
