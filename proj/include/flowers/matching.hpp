#pragma once

// Maximum matching in general graphs via blossom contraction, plus helpers
// for matchings restricted to vertex masks or explicit edge subsets, and an
// enumerator for the full family of maximum matchings of small graphs.

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "flowers/graph.hpp"

namespace flowers {

using Matching = std::vector<Edge>;

namespace detail {

class BlossomMatcher {
 public:
  BlossomMatcher(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
    for (auto e : edges) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  // match_[v] = partner or -1. A nonnegative cap stops augmenting once more
  // than cap edges are matched.
  const std::vector<int>& solve(int cap = -1) {
    match_.assign(n_, -1);
    p_.assign(n_, -1);
    base_.resize(n_);
    used_.assign(n_, 0);
    blossom_.assign(n_, 0);
    int size = 0;
    for (int v = 0; v < n_; ++v) {
      if (cap >= 0 && size > cap) break;
      if (match_[v] != -1) continue;
      int leaf = find_path(v);
      if (leaf != -1) ++size;
      while (leaf != -1) {  // flip matched/unmatched along the alternating path
        int pv = p_[leaf], ppv = match_[pv];
        match_[leaf] = pv;
        match_[pv] = leaf;
        leaf = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    int x = a;
    while (true) {
      x = base_[x];
      seen[x] = 1;
      if (match_[x] == -1) break;
      x = p_[match_[x]];
    }
    int y = b;
    while (true) {
      y = base_[y];
      if (seen[y]) return y;
      y = p_[match_[y]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          // Odd cycle: contract the blossom up to the common base.
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              q.push(i);
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace detail

inline Matching max_matching_of_edges(int n, const std::vector<Edge>& edges) {
  detail::BlossomMatcher bm(n, edges);
  const auto& match = bm.solve();
  Matching out;
  for (int v = 0; v < n; ++v)
    if (match[v] > v) out.push_back({v, match[v]});
  return out;
}

inline Matching max_matching(const Graph& g) { return max_matching_of_edges(g.order(), g.edges()); }

inline int matching_number(const Graph& g) { return static_cast<int>(max_matching(g).size()); }

// True iff the matching number exceeds cap; stops as soon as cap + 1 edges
// match instead of finishing the maximum matching.
inline bool matching_number_exceeds(int n, const std::vector<Edge>& edges, int cap) {
  if (cap < 0) return !edges.empty();
  if (static_cast<int>(edges.size()) <= cap) return false;
  detail::BlossomMatcher matcher(n, edges);
  const std::vector<int>& match = matcher.solve(cap);
  int matched = 0;
  for (int partner : match)
    if (partner != -1) ++matched;
  return matched > 2 * cap;
}

inline Matching max_matching_in(const Graph& g, const VertexSet& allowed) {
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (allowed.test(e.u) && allowed.test(e.v)) edges.push_back(e);
  return max_matching_of_edges(g.order(), edges);
}

inline int matching_number_in(const Graph& g, const VertexSet& allowed) {
  return static_cast<int>(max_matching_in(g, allowed).size());
}

// Every edge must exist in g.
inline int matching_number_of_edgeset(const Graph& g, const std::vector<Edge>& edges) {
  for (auto e : edges)
    if (!g.has_edge(e.u, e.v))
      throw input_error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " not present in the graph");
  return static_cast<int>(max_matching_of_edges(g.order(), edges).size());
}

namespace detail {

inline void all_max_matchings_rec(const std::vector<Edge>& edges, std::size_t idx, int target,
                                  std::vector<Edge>& cur, std::vector<char>& used,
                                  std::vector<Matching>& out, std::size_t cap, bool& truncated) {
  if (static_cast<int>(cur.size()) == target) {
    if (out.size() < cap) out.push_back(cur);
    else truncated = true;
    return;
  }
  if (truncated) return;
  // Cheap feasibility bound: each remaining edge adds at most one.
  if (cur.size() + (edges.size() - idx) < static_cast<std::size_t>(target)) return;
  for (std::size_t i = idx; i < edges.size(); ++i) {
    auto e = edges[i];
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    cur.push_back(e);
    all_max_matchings_rec(edges, i + 1, target, cur, used, out, cap, truncated);
    cur.pop_back();
    used[e.u] = used[e.v] = 0;
    if (truncated) return;
  }
}

}  // namespace detail

// All maximum matchings, at most `cap` of them; sets *truncated when cut off.
inline std::vector<Matching> all_max_matchings(const Graph& g, std::size_t cap,
                                               bool* truncated = nullptr) {
  auto edges = g.edges();
  int target = static_cast<int>(max_matching_of_edges(g.order(), edges).size());
  std::vector<Matching> out;
  if (target == 0) {
    out.push_back({});
    if (truncated) *truncated = false;
    return out;
  }
  std::vector<Edge> cur;
  std::vector<char> used(g.order(), 0);
  bool trunc = false;
  detail::all_max_matchings_rec(edges, 0, target, cur, used, out, cap, trunc);
  if (truncated) *truncated = trunc;
  return out;
}

inline std::vector<Matching> all_max_matchings_of_edges(int n, const std::vector<Edge>& edges,
                                                        std::size_t cap,
                                                        bool* truncated = nullptr) {
  int target = static_cast<int>(max_matching_of_edges(n, edges).size());
  std::vector<Matching> out;
  if (target == 0) {
    out.push_back({});
    if (truncated) *truncated = false;
    return out;
  }
  std::vector<Edge> cur;
  std::vector<char> used(n, 0);
  bool trunc = false;
  detail::all_max_matchings_rec(edges, 0, target, cur, used, out, cap, trunc);
  if (truncated) *truncated = trunc;
  return out;
}

}  // namespace flowers
