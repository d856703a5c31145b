#pragma once

// Backtracking search for flower copies. Candidate centers are tried in
// descending degree order; cycles are laid shortest first (triangles are the
// scarcest petals in the near-bipartite hosts this search has to refute),
// extending by the lowest admissible vertex id. Every admissible extension
// attempt charges one
// node against the budget. A parity-aware distance bound (BFS on the
// bipartite double cover of the part not yet consumed) prunes branches that
// cannot close an odd cycle in the remaining length; this is what keeps
// near-bipartite hosts cheap to refute. Each cycle keeps its own distance
// snapshot taken when the cycle starts, so the bound stays a valid lower
// bound for the whole subtree.
//
// Duplicate copies are avoided structurally: each cycle is recorded with its
// smaller center-neighbor first, equal-length cycles ascend by that lead
// vertex, and single-cycle specs anchor the center at the cycle's minimum
// vertex.

#include <algorithm>
#include <array>
#include <optional>

#include "flowers/embedding.hpp"

namespace flowers {

enum class SearchOutcome { Found, Free, BudgetExhausted };

inline constexpr long long kDefaultSearchBudget = 10'000'000;

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Free;
  std::optional<FlowerEmbedding> embedding;
  long long nodes = 0;
};

namespace detail {

template <typename Emit>
class FlowerSearcher {
 public:
  FlowerSearcher(const Graph& g, const FlowerSpec& spec, long long budget, Emit& emit)
      : g_(g), spec_(spec), budget_(budget), emit_(emit), used_(g.order()) {
    lengths_ = spec.all_lengths();
    dist_.resize(lengths_.size());
    for (auto& d : dist_) {
      d[0].assign(g.order(), -1);
      d[1].assign(g.order(), -1);
    }
  }

  SearchOutcome run() {
    if (g_.order() < spec_.vertex_count()) return SearchOutcome::Free;
    std::vector<int> centers;
    for (int v = 0; v < g_.order(); ++v)
      if (g_.degree(v) >= spec_.center_degree()) centers.push_back(v);
    std::stable_sort(centers.begin(), centers.end(),
                     [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
    for (int x : centers) {
      center_ = x;
      used_.clear();
      cycles_.clear();
      leads_.clear();
      build_cycle(0);
      if (stopped_) return SearchOutcome::Found;
      if (exhausted_) return SearchOutcome::BudgetExhausted;
    }
    return SearchOutcome::Free;
  }

  long long nodes() const { return nodes_; }

 private:
  bool charge() {
    if (++nodes_ >= budget_) exhausted_ = true;
    return !exhausted_;
  }

  // Parity-split BFS from the center across vertices unused when cycle `idx`
  // starts. dist_[idx][p][v] is the shortest center-free walk v -> center of
  // parity p in that snapshot; later path growth only removes options, so the
  // snapshot is a lower bound for the whole cycle subtree.
  void take_distance_snapshot(std::size_t idx) {
    auto& d = dist_[idx];
    std::fill(d[0].begin(), d[0].end(), -1);
    std::fill(d[1].begin(), d[1].end(), -1);
    d[0][center_] = 0;
    frontier_.clear();
    frontier_.push_back(center_ << 1);
    for (std::size_t head = 0; head < frontier_.size(); ++head) {
      int v = frontier_[head] >> 1, p = frontier_[head] & 1;
      int dd = d[p][v];
      g_.neighbors(v).for_each([&](int w) {
        if (w == center_ || used_.test(w)) return;
        if (d[p ^ 1][w] == -1) {
          d[p ^ 1][w] = dd + 1;
          frontier_.push_back((w << 1) | (p ^ 1));
        }
      });
    }
  }

  void build_cycle(std::size_t idx) {
    if (idx == lengths_.size()) {
      FlowerEmbedding emb;
      emb.center = center_;
      emb.cycles = cycles_;
      if (!emit_(emb)) stopped_ = true;
      return;
    }
    take_distance_snapshot(idx);
    std::vector<int> path;
    path.push_back(center_);
    extend(idx, path);
  }

  void extend(std::size_t idx, std::vector<int>& path) {
    int q = lengths_[idx];
    if (static_cast<int>(path.size()) == q) {
      if (g_.has_edge(path.back(), center_) && path[1] < path.back()) {
        cycles_.push_back(path);
        leads_.push_back(path[1]);
        build_cycle(idx + 1);
        cycles_.pop_back();
        leads_.pop_back();
      }
      return;
    }
    int at = path.back();
    int rem = q - static_cast<int>(path.size());  // edges from the next vertex back to center
    bool is_lead = path.size() == 1;
    const auto& d = dist_[idx][rem & 1];
    for (int v = g_.neighbors(at).next(); v != -1; v = g_.neighbors(at).next(v + 1)) {
      if (stopped_ || exhausted_) return;
      if (v == center_ || used_.test(v)) continue;
      if (spec_.k() == 1 && v < center_) continue;  // anchor lone cycles at their min vertex
      if (is_lead && idx > 0 && lengths_[idx] == lengths_[idx - 1] && v <= leads_[idx - 1])
        continue;  // equal-length cycles ascend by lead
      if (!charge()) return;
      if (d[v] == -1 || d[v] > rem) continue;
      used_.set(v);
      path.push_back(v);
      extend(idx, path);
      path.pop_back();
      used_.reset(v);
    }
  }

  const Graph& g_;
  FlowerSpec spec_;
  long long budget_;
  Emit& emit_;
  Bitvec used_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> cycles_;
  std::vector<int> leads_;
  std::vector<int> frontier_;
  std::vector<std::array<std::vector<int>, 2>> dist_;
  int center_ = -1;
  long long nodes_ = 0;
  bool stopped_ = false;
  bool exhausted_ = false;
};

}  // namespace detail

// Calls f for every flower copy until f returns false. Returns Free when the
// whole space was exhausted, Found when f stopped the scan.
template <typename F>
SearchOutcome for_each_flower(const Graph& g, const FlowerSpec& spec, long long budget,
                              long long* nodes_out, F&& f) {
  detail::FlowerSearcher<F> searcher(g, spec, budget, f);
  SearchOutcome outcome = searcher.run();
  if (nodes_out) *nodes_out = searcher.nodes();
  return outcome;
}

// First copy if any. Order floor: hosts below vertex_count are Free at zero cost.
inline SearchResult contains_flower(const Graph& g, const FlowerSpec& spec,
                                    long long budget = kDefaultSearchBudget) {
  SearchResult res;
  res.outcome = for_each_flower(g, spec, budget, &res.nodes, [&](const FlowerEmbedding& emb) {
    res.embedding = emb;
    return false;
  });
  return res;
}

}  // namespace flowers
