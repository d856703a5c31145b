#pragma once

// Exhaustive isomorph-free generation of small graphs. SmallGraph keeps one
// 32-bit adjacency row per vertex; canonical codes come from degree
// refinement with individualization backtracking, pruned by automorphisms
// discovered along the way. The stream grows graphs one vertex at a time and
// keeps a child exactly when deleting its canonically-last vertex recovers
// the parent, so no global duplicate table is needed.

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "flowers/graph.hpp"
#include "flowers/matching.hpp"

namespace flowers {

struct SmallGraph {
  static constexpr int kMaxOrder = 20;

  int n = 0;
  std::array<std::uint32_t, kMaxOrder> row{};

  SmallGraph() = default;
  explicit SmallGraph(int order) : n(order) {
    if (order < 0 || order > kMaxOrder)
      throw input_error("SmallGraph supports orders 0.." + std::to_string(kMaxOrder) +
                        ", got " + std::to_string(order));
  }

  bool has_edge(int u, int v) const { return (row[u] >> v) & 1u; }
  void add_edge(int u, int v) {
    row[u] |= 1u << v;
    row[v] |= 1u << u;
  }
  int degree(int v) const { return std::popcount(row[v]); }
  int size() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
  }

  static SmallGraph from_graph(const Graph& g) {
    SmallGraph s(g.order());
    for (auto e : g.edges()) s.add_edge(e.u, e.v);
    return s;
  }

  Graph to_graph() const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (has_edge(u, v)) g.add_edge(u, v);
    return g;
  }

  bool operator==(const SmallGraph& o) const {
    if (n != o.n) return false;
    for (int v = 0; v < n; ++v)
      if (row[v] != o.row[v]) return false;
    return true;
  }
};

// Upper-triangle bits of the canonically relabeled graph; 190 bits cover
// kMaxOrder, lexicographic order compares codes.
using GraphCode = std::array<std::uint64_t, 3>;

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g) {}

  // Minimum code over all labelings reachable from the refined partition.
  GraphCode run(std::vector<int>* order_out) {
    if (g_.n == 0) {
      if (order_out) order_out->clear();
      return GraphCode{};
    }
    std::vector<std::vector<int>> cells = initial_cells();
    refine(cells);
    std::vector<int> fixed;
    descend(cells, fixed);
    if (order_out) *order_out = best_order_;
    return best_;
  }

 private:
  std::vector<std::vector<int>> initial_cells() const {
    std::vector<std::vector<int>> by_degree(g_.n);
    for (int v = 0; v < g_.n; ++v) by_degree[g_.degree(v)].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& c : by_degree)
      if (!c.empty()) cells.push_back(std::move(c));
    if (cells.empty()) cells.push_back({});
    return cells;
  }

  // Classic 1-dimensional refinement: split every cell by the vector of
  // neighbor counts into all current cells, repeat to a fixed point.
  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint32_t> masks;
      masks.reserve(cells.size());
      for (const auto& c : cells) {
        std::uint32_t m = 0;
        for (int v : c) m |= 1u << v;
        masks.push_back(m);
      }
      std::vector<std::vector<int>> next;
      for (const auto& c : cells) {
        if (c.size() == 1) {
          next.push_back(c);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (int v : c) {
          std::vector<int> key;
          key.reserve(masks.size());
          for (auto m : masks) key.push_back(std::popcount(g_.row[v] & m));
          keyed.push_back({std::move(key), v});
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<int> cur{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            if (cur.size() < c.size()) changed = true;
            next.push_back(std::move(cur));
            cur.clear();
          }
          cur.push_back(keyed[i].second);
        }
        next.push_back(std::move(cur));
      }
      cells = std::move(next);
    }
  }

  void descend(const std::vector<std::vector<int>>& cells, std::vector<int>& fixed) {
    std::size_t branch = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        branch = i;
        break;
      }

    if (branch == cells.size()) {
      std::vector<int> order;
      order.reserve(g_.n);
      for (const auto& c : cells) order.push_back(c[0]);
      record_leaf(order);
      return;
    }

    std::vector<int> tried;
    for (int v : cells[branch]) {
      if (equivalent_to_tried(v, tried, fixed)) continue;
      tried.push_back(v);
      std::vector<std::vector<int>> split;
      split.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < branch; ++i) split.push_back(cells[i]);
      split.push_back({v});
      std::vector<int> rest;
      for (int w : cells[branch])
        if (w != v) rest.push_back(w);
      split.push_back(std::move(rest));
      for (std::size_t i = branch + 1; i < cells.size(); ++i) split.push_back(cells[i]);
      refine(split);
      fixed.push_back(v);
      descend(split, fixed);
      fixed.pop_back();
    }
  }

  // A stored automorphism that fixes the individualized prefix and maps an
  // already-tried vertex onto v proves v's branch is a replay.
  bool equivalent_to_tried(int v, const std::vector<int>& tried,
                           const std::vector<int>& fixed) const {
    for (const auto& pi : autos_) {
      bool ok = true;
      for (int f : fixed)
        if (pi[f] != f) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int u : tried)
        if (pi[u] == v) return true;
    }
    return false;
  }

  void record_leaf(const std::vector<int>& order) {
    GraphCode code{};
    int bit = 0;
    for (int i = 0; i < g_.n; ++i)
      for (int j = i + 1; j < g_.n; ++j, ++bit)
        if (g_.has_edge(order[i], order[j])) code[bit >> 6] |= 1ull << (bit & 63);

    if (!have_ || code < best_) {
      best_ = code;
      best_order_ = order;
      have_ = true;
    } else if (code == best_ && autos_.size() < 64) {
      // Equal codes certify best_order_[p] -> order[p] as an automorphism.
      std::vector<int> pi(g_.n);
      for (int p = 0; p < g_.n; ++p) pi[best_order_[p]] = order[p];
      autos_.push_back(std::move(pi));
    }
  }

  const SmallGraph& g_;
  GraphCode best_{};
  std::vector<int> best_order_;
  bool have_ = false;
  std::vector<std::vector<int>> autos_;
};

}  // namespace detail

inline GraphCode canonical_code(const SmallGraph& g) {
  return detail::Canonizer(g).run(nullptr);
}

// order[i] = vertex placed at canonical position i.
inline GraphCode canonical_code(const SmallGraph& g, std::vector<int>& order) {
  return detail::Canonizer(g).run(&order);
}

inline bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.n != b.n || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

// All caps are optional (-1 / false = off). Edge, degree-above, and matching
// caps prune the generation tree; degree-below and connectedness only gate
// what the stream yields.
struct EnumerationFilters {
  int max_edges = -1;
  int min_degree = -1;
  int max_degree = -1;
  int nu_cap = -1;
  bool connected_only = false;
};

inline constexpr int kEnumerationCap = 10;

class EnumerationStream {
 public:
  // Unfiltered enumeration is capped at 10 vertices. A tree-pruning filter
  // (edge, degree, or matching cap) lifts the cap to SmallGraph's limit,
  // since the generation tree stays narrow.
  explicit EnumerationStream(int n, EnumerationFilters filters = {})
      : target_(n), filters_(filters) {
    if (n < 1) throw input_error("enumeration needs at least one vertex");
    bool pruned = filters.max_edges >= 0 || filters.max_degree >= 0 || filters.nu_cap >= 0;
    int cap = pruned ? SmallGraph::kMaxOrder : kEnumerationCap;
    if (n > cap)
      throw cap_error("exhaustive enumeration is capped at " + std::to_string(cap) +
                      " vertices here, got " + std::to_string(n));
    SmallGraph root(1);
    stack_.push_back(make_frame(root, canonical_code(root)));
  }

  int order() const { return target_; }
  std::uint64_t cursor() const { return yielded_; }

  std::optional<SmallGraph> next() {
    if (target_ == 1) {
      if (root_emitted_) return std::nullopt;
      root_emitted_ = true;
      SmallGraph g(1);
      if (!yield_ok(g)) return std::nullopt;
      ++yielded_;
      return g;
    }

    while (!stack_.empty()) {
      Frame& top = stack_.back();
      int m = top.g.n;
      if (top.next_idx >= top.masks.size()) {
        stack_.pop_back();
        continue;
      }
      std::uint32_t mask = top.masks[top.next_idx++];

      int new_deg = std::popcount(mask);
      if (filters_.max_degree >= 0 && new_deg > filters_.max_degree) continue;
      if (filters_.max_edges >= 0 && top.g.size() + new_deg > filters_.max_edges) continue;

      SmallGraph child = top.g;
      child.n = m + 1;
      child.row[m] = mask;
      for (int v = 0; v < m; ++v)
        if ((mask >> v) & 1u) child.row[v] |= 1u << m;

      if (!grow_ok(child)) continue;

      std::vector<int> order;
      GraphCode code = canonical_code(child, order);
      if (stack_.back().seen.count(code)) continue;
      stack_.back().seen.insert(code);
      if (!deletion_accepts(child, order, top.code)) continue;

      if (child.n == target_) {
        if (!yield_ok(child)) continue;
        ++yielded_;
        return child;
      }
      stack_.push_back(make_frame(child, code));
    }
    return std::nullopt;
  }

  void skip(std::uint64_t count) {
    while (count-- > 0)
      if (!next().has_value()) return;
  }

 private:
  struct Frame {
    SmallGraph g;
    GraphCode code;
    std::vector<std::uint32_t> masks;  // candidate neighbor sets, ascending
    std::size_t next_idx;
    std::set<GraphCode> seen;
  };

  // Neighbor masks for the next vertex, in ascending numeric order. Degree
  // and edge caps bound the popcount, which keeps deep frames at a few
  // hundred candidates instead of 2^m.
  Frame make_frame(const SmallGraph& g, const GraphCode& code) const {
    int m = g.n;
    int maxpop = m;
    if (filters_.max_degree >= 0) maxpop = std::min(maxpop, filters_.max_degree);
    if (filters_.max_edges >= 0) maxpop = std::min(maxpop, filters_.max_edges - g.size());
    std::vector<std::uint32_t> masks;
    if (maxpop < 0) {
      // no room for any further edge; the bare extension is still legal
      masks.push_back(0);
    } else if (maxpop >= m) {
      masks.resize(std::size_t{1} << m);
      for (std::uint32_t v = 0; v < masks.size(); ++v) masks[v] = v;
    } else {
      for (int p = 0; p <= maxpop; ++p) {
        if (p == 0) {
          masks.push_back(0);
          continue;
        }
        std::uint32_t v = (1u << p) - 1;
        while (v < (1u << m)) {
          masks.push_back(v);
          std::uint32_t t = v | (v - 1);
          v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
        }
      }
      std::sort(masks.begin(), masks.end());
    }
    return {g, code, std::move(masks), 0, {}};
  }

  // Monotone caps: a supergraph on more vertices can only get worse.
  bool grow_ok(const SmallGraph& g) const {
    if (filters_.max_edges >= 0 && g.size() > filters_.max_edges) return false;
    if (filters_.max_degree >= 0)
      for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > filters_.max_degree) return false;
    if (filters_.min_degree > 0) {
      // Each future edge raises at most one existing vertex's degree, so the
      // remaining edge supply must cover the current degree deficiency.
      long long deficiency = 0;
      for (int v = 0; v < g.n; ++v)
        deficiency += std::max(0, filters_.min_degree - g.degree(v));
      long long per_new = filters_.max_degree >= 0 ? filters_.max_degree : target_ - 1;
      long long supply = static_cast<long long>(target_ - g.n) * per_new;
      if (filters_.max_edges >= 0)
        supply = std::min(supply, static_cast<long long>(filters_.max_edges) - g.size());
      if (deficiency > supply) return false;
    }
    if (filters_.nu_cap >= 0) {
      std::vector<Edge> es;
      for (int u = 0; u < g.n; ++u) {
        std::uint32_t rest = g.row[u] & ~((2u << u) - 1);
        while (rest) {
          es.push_back({u, std::countr_zero(rest)});
          rest &= rest - 1;
        }
      }
      if (matching_number_exceeds(g.n, es, filters_.nu_cap)) return false;
    }
    return true;
  }

  bool yield_ok(const SmallGraph& g) const {
    if (filters_.min_degree >= 0)
      for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < filters_.min_degree) return false;
    if (filters_.connected_only && !is_connected(g)) return false;
    return true;
  }

  static bool is_connected(const SmallGraph& g) {
    if (g.n == 0) return true;
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
      std::uint32_t grow = 0;
      for (int v = 0; v < g.n; ++v)
        if ((frontier >> v) & 1u) grow |= g.row[v];
      frontier = grow & ~seen;
      seen |= grow;
    }
    return std::popcount(seen) == g.n;
  }

  // Keep the child iff removing its canonically-last vertex gives back the
  // parent; deleting the vertex we just added is the identity case.
  static bool deletion_accepts(const SmallGraph& child, const std::vector<int>& order,
                               const GraphCode& parent_code) {
    int last = order.back();
    if (last == child.n - 1) return true;
    SmallGraph shrunk(child.n - 1);
    std::vector<int> map;
    map.reserve(child.n - 1);
    for (int v = 0; v < child.n; ++v)
      if (v != last) map.push_back(v);
    for (int i = 0; i < shrunk.n; ++i)
      for (int j = i + 1; j < shrunk.n; ++j)
        if (child.has_edge(map[i], map[j])) shrunk.add_edge(i, j);
    return canonical_code(shrunk) == parent_code;
  }

  int target_;
  EnumerationFilters filters_;
  std::vector<Frame> stack_;
  std::uint64_t yielded_ = 0;
  bool root_emitted_ = false;
};

inline std::vector<SmallGraph> enumerate_graphs(int n, EnumerationFilters filters = {}) {
  EnumerationStream stream(n, filters);
  std::vector<SmallGraph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace flowers
