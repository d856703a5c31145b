#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowers/cut.hpp"
#include "flowers/embedding.hpp"
#include "flowers/errors.hpp"
#include "flowers/flower_build.hpp"
#include "flowers/flower_search.hpp"
#include "flowers/flower_spec.hpp"
#include "flowers/graph.hpp"
#include "flowers/matching.hpp"
#include "flowers/potential.hpp"

namespace flowers {

enum class PeelMode { kEdgeCount, kPhi };

struct PeelRemoval {
  int vertex = -1;
  int degree = 0;  // at removal time
};

struct PeelResult {
  Graph kept{0};
  std::vector<int> map;             // kept id -> original id
  std::vector<PeelRemoval> peeled;  // original ids, removal order
  int n_prime = 0;
  PeelMode mode = PeelMode::kEdgeCount;
  bool empty() const { return n_prime == 0; }
};

// Repeatedly delete the lowest-id vertex of degree below half the current
// order. Each removal costs its degree at removal time, so the input edge
// count equals the kept edges plus the recorded degrees. The two modes share
// the removal rule and differ only in which running quantity the caller
// charges the removals against.
inline PeelResult peel_min_degree(const Graph& g, PeelMode mode, const FlowerSpec&) {
  PeelResult out;
  out.mode = mode;
  int n = g.order();
  VertexSet alive = g.full_set();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int order = n;
  while (order > 0) {
    int half = order / 2;
    int pick = -1;
    for (int v = alive.next(0); v != -1; v = alive.next(v + 1))
      if (deg[v] < half) {
        pick = v;
        break;
      }
    if (pick == -1) break;
    out.peeled.push_back({pick, deg[pick]});
    VertexSet touched = g.neighbors(pick) & alive;
    touched.for_each([&](int w) { --deg[w]; });
    alive.reset(pick);
    --order;
  }
  auto [kept, map] = induced_subgraph(g, alive);
  out.kept = std::move(kept);
  out.map = std::move(map);
  out.n_prime = order;
  return out;
}

// One cut plus the vertices whose in-part degree crosses the profile
// threshold, grouped by side.
struct BadSetState {
  CutState cut;
  std::pair<VertexSet, VertexSet> bad;
  double beta = 0.0;
  double threshold = 0.0;
  int m = 0;  // in-part edges under the cut
};

inline BadSetState bad_set(const Graph& g, const CutState& cut, const FlowerSpec&,
                           const Profile& profile) {
  int n = g.order();
  if (cut.side_mask().width() != n) throw input_error("bad_set: cut and graph orders differ");
  double thr = profile.bad_threshold(n);
  std::pair<VertexSet, VertexSet> bad{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v)
    if (cut.in_degree(v) > thr) (cut.side(v) == 0 ? bad.first : bad.second).set(v);
  return {cut, std::move(bad), profile.beta, thr, cut.in_edges(0) + cut.in_edges(1)};
}

inline BadSetState bad_set(const Graph& g, const CutState& cut, const FlowerSpec& spec) {
  return bad_set(g, cut, spec, desk_profile(spec));
}

// Trim every bad vertex down to k*ceil(d/2k) in-part edges, kept toward its
// lowest-id non-bad in-part neighbours; all other in-part edges at the vertex
// go. Feasible only while each side's whole bad set fits inside the slack
// d - k*ceil(d/2k) of each of its members. Afterwards every bad vertex holds
// a positive multiple of k in-part edges, no in-part edge joins two bad
// vertices, cross edges are untouched, and at least half the in-part mass of
// the input survives.
inline Graph regularize_bad(const Graph& g, const BadSetState& state, const FlowerSpec& spec) {
  int n = g.order();
  if (state.cut.side_mask().width() != n)
    throw input_error("regularize_bad: state and graph orders differ");
  int k = spec.k();
  Graph out = g;
  for (int i = 0; i < 2; ++i) {
    const VertexSet& bad = i == 0 ? state.bad.first : state.bad.second;
    VertexSet side = state.cut.side_set(i);
    int bad_count = bad.count();
    for (int v = bad.next(0); v != -1; v = bad.next(v + 1)) {
      int d = state.cut.in_degree(v);
      int keep = k * ((d + 2 * k - 1) / (2 * k));
      if (d - keep < bad_count)
        throw precondition_error("regularize_bad: vertex " + std::to_string(v) +
                                 " has slack " + std::to_string(d - keep) +
                                 " against a bad set of " + std::to_string(bad_count));
      VertexSet targets = g.neighbors(v) & side;
      targets.subtract(bad);
      int kept_here = 0;
      for (int w = targets.next(0); w != -1; w = targets.next(w + 1)) {
        if (kept_here < keep) {
          ++kept_here;
          continue;
        }
        out.remove_edge(v, w);
      }
      if (kept_here != keep) throw internal_error("regularize_bad: trimmed stub fell short");
      VertexSet bad_nbrs = g.neighbors(v) & side;
      bad_nbrs &= bad;
      for (int w = bad_nbrs.next(0); w != -1; w = bad_nbrs.next(w + 1)) out.remove_edge(v, w);
    }
  }
  CutState after(out, state.cut.side_mask());
  if (2 * (after.in_edges(0) + after.in_edges(1)) < state.m)
    throw internal_error("regularize_bad: lost more than half the in-part mass");
  if (after.cross_edges() != state.cut.cross_edges())
    throw internal_error("regularize_bad: cross edges changed");
  for (int i = 0; i < 2; ++i) {
    const VertexSet& bad = i == 0 ? state.bad.first : state.bad.second;
    for (int v = bad.next(0); v != -1; v = bad.next(v + 1)) {
      int d = after.in_degree(v);
      if (d <= 0 || d % k != 0)
        throw internal_error("regularize_bad: stub not a positive multiple of k");
    }
  }
  return out;
}

struct ForceExtremalRecord {
  int vertex = -1;
  int side = 0;
  bool checked = false;  // the triangle guard reached the inequality
  bool holds = true;
  int in_degree = 0;
  int m_size = 0;
  int nu_rest = 0;
  int worst_nu_edge = 0;
  int worst_total = 0;
};

struct ForceExtremalReport {
  std::vector<ForceExtremalRecord> records;
  std::vector<int> violators;
  bool all_hold = true;
  bool sampled = false;  // canonical matchings only, above the exhaustive cap
};

inline constexpr int kForceExtremalExhaustiveCap = 32;

namespace detail {

// Visits every maximum matching of the edges inside `allowed` exactly once.
template <typename F>
inline void for_each_maximum_matching(const Graph& g, const VertexSet& allowed, int target,
                                      F&& visit) {
  std::vector<Edge> pool;
  for (auto e : g.edges())
    if (allowed.test(e.u) && allowed.test(e.v)) pool.push_back(e);
  std::vector<Edge> chosen;
  VertexSet used(g.order());
  auto descend = [&](auto&& self, std::size_t idx) -> void {
    if (static_cast<int>(chosen.size()) == target) {
      visit(chosen);
      return;
    }
    if (idx == pool.size()) return;
    if (static_cast<int>(chosen.size() + pool.size() - idx) < target) return;
    Edge e = pool[idx];
    if (!used.test(e.u) && !used.test(e.v)) {
      used.set(e.u);
      used.set(e.v);
      chosen.push_back(e);
      self(self, idx + 1);
      chosen.pop_back();
      used.reset(e.u);
      used.reset(e.v);
    }
    self(self, idx + 1);
  };
  descend(descend, 0);
}

}  // namespace detail

// Per-vertex audit of the extremal forcing inequality: wherever the triangle
// guard in_degree + m_size >= s is met, the potential total must stay at or
// below k - 1 for every maximum matching of the vertex's out-neighbourhood.
// Orders above the cap fall back to the canonical matching and are flagged.
inline ForceExtremalReport force_extremal_check(const Graph& g, const CutState& cut,
                                                const FlowerSpec& spec,
                                                int exhaustive_cap = kForceExtremalExhaustiveCap) {
  int n = g.order();
  if (cut.side_mask().width() != n)
    throw input_error("force_extremal_check: cut and graph orders differ");
  ForceExtremalReport rep;
  rep.sampled = n > exhaustive_cap;
  std::pair<VertexSet, VertexSet> none{VertexSet(n), VertexSet(n)};
  for (int x = 0; x < n; ++x) {
    PotentialRecord base = flower_potential(g, cut, x, none);
    ForceExtremalRecord rec;
    rec.vertex = x;
    rec.side = base.side;
    rec.in_degree = base.in_degree;
    rec.m_size = base.m_size;
    rec.nu_rest = base.nu_rest;
    rec.worst_nu_edge = base.nu_edge;
    rec.checked = base.in_degree + base.m_size >= spec.s;
    if (rec.checked && !rep.sampled) {
      VertexSet other = cut.side_set(1 - base.side);
      VertexSet allowed = g.neighbors(x) & other;
      detail::for_each_maximum_matching(
          g, allowed, base.m_size, [&](const std::vector<Edge>& m) {
            VertexSet a = other;
            for (auto e : m) {
              a.reset(e.u);
              a.reset(e.v);
            }
            int nu = matching_number_of_edgeset(g, restricted_edge_set(g, a, x));
            rec.worst_nu_edge = std::max(rec.worst_nu_edge, nu);
          });
    }
    rec.worst_total = rec.in_degree + rec.m_size + rec.nu_rest + rec.worst_nu_edge;
    rec.holds = !rec.checked || rec.worst_total <= spec.k() - 1;
    if (!rec.holds) rep.violators.push_back(x);
    rep.all_hold = rep.all_hold && rec.holds;
    rep.records.push_back(rec);
  }
  return rep;
}

struct AlgorithmRun {
  std::vector<FlowerEmbedding> flowers;
  Graph residual{0};
  int iterations = 0;
  std::vector<int> deleted;  // vertices retired by the balanced variant
  std::string halt;          // empty on clean termination
};

// Extraction loop for hosts with heavy in-part mass. Step 1 centers flowers
// on vertices holding k in-part edges, bad vertices first, until none remain;
// step 2 then spends k-matchings inside a part through their lowest-id common
// out-neighbour. Each extraction removes exactly k in-part edges, so the
// input in-part mass equals k * flowers + residual in-part edges. On clean
// termination no vertex has k in-part edges, neither part has a k-matching,
// and every bad vertex drained to zero.
inline AlgorithmRun algorithm1(const Graph& g0, const BadSetState& state, const FlowerSpec& spec,
                               const Profile& profile) {
  int n = g0.order();
  if (state.cut.side_mask().width() != n)
    throw input_error("algorithm1: state and graph orders differ");
  int k = spec.k();
  AlgorithmRun run;
  Graph w = g0;
  CutState cut(w, state.cut.side_mask());
  VertexSet bad_all = state.bad.first | state.bad.second;
  long long m0 = cut.in_edges(0) + cut.in_edges(1);

  std::pair<VertexSet, VertexSet> active{VertexSet(n), VertexSet(n)};
  auto refresh = [&]() {
    double floor_deg = profile.active_threshold(n);
    for (int i = 0; i < 2; ++i) {
      VertexSet& u = i == 0 ? active.first : active.second;
      u = cut.side_set(i);
      u.subtract(i == 0 ? state.bad.first : state.bad.second);
      for (int v = u.next(0); v != -1; v = u.next(v + 1))
        if (cut.out_degree(v) < floor_deg) u.reset(v);
    }
  };
  refresh();

  auto extract = [&](int x) -> bool {
    FlowerEmbedding emb;
    try {
      emb = find_flower_centered(w, cut, state.bad, active, x, spec, profile);
    } catch (const precondition_error& e) {
      run.halt = "iteration " + std::to_string(run.iterations + 1) + ": " + e.what();
      return false;
    } catch (const stitch_error& e) {
      run.halt = "iteration " + std::to_string(run.iterations + 1) + ": " + e.what();
      return false;
    }
    for (auto e : embedding_edges(emb))
      if (!w.remove_edge(e.u, e.v))
        throw internal_error("algorithm1: extracted edge missing from the working graph");
    cut.recount();
    refresh();
    run.flowers.push_back(std::move(emb));
    ++run.iterations;
    return true;
  };

  bool halted = false;
  while (!halted) {
    int pick = -1;
    for (int v = bad_all.next(0); v != -1; v = bad_all.next(v + 1))
      if (cut.in_degree(v) >= k) {
        pick = v;
        break;
      }
    if (pick == -1)
      for (int v = 0; v < n && pick == -1; ++v)
        if (!bad_all.test(v) && cut.in_degree(v) >= k) pick = v;
    if (pick == -1) break;
    halted = !extract(pick);
  }

  while (!halted) {
    int side = -1;
    Matching mat;
    for (int i = 0; i < 2 && side == -1; ++i) {
      mat = max_matching_in(w, cut.side_set(i));
      if (static_cast<int>(mat.size()) >= k) side = i;
    }
    if (side == -1) break;
    mat.resize(k);
    int x = -1;
    VertexSet others = cut.side_set(1 - side);
    for (int v = others.next(0); v != -1 && x == -1; v = others.next(v + 1)) {
      bool spans = true;
      for (auto e : mat) spans = spans && w.has_edge(v, e.u) && w.has_edge(v, e.v);
      if (spans) x = v;
    }
    if (x == -1) {
      run.halt = "iteration " + std::to_string(run.iterations + 1) +
                 ": no common out-neighbour spans the in-part matching";
      break;
    }
    halted = !extract(x);
  }

  if (run.halt.empty()) {
    for (int v = 0; v < n; ++v)
      if (cut.in_degree(v) >= k) throw internal_error("algorithm1: heavy center survived");
    for (int i = 0; i < 2; ++i)
      if (matching_number_in(w, cut.side_set(i)) >= k)
        throw internal_error("algorithm1: in-part k-matching survived");
    for (int v = bad_all.next(0); v != -1; v = bad_all.next(v + 1))
      if (cut.in_degree(v) != 0) throw internal_error("algorithm1: bad vertex kept in-part edges");
  }
  if (m0 != static_cast<long long>(run.flowers.size()) * k + cut.in_edges(0) + cut.in_edges(1))
    throw internal_error("algorithm1: in-part edge conservation failed");
  run.residual = std::move(w);
  return run;
}

inline AlgorithmRun algorithm1(const Graph& g0, const BadSetState& state,
                               const FlowerSpec& spec) {
  return algorithm1(g0, state, spec, desk_profile(spec));
}

// Extraction loop for balanced hosts with sparse in-part mass and no bad
// vertices. Each round recenters on the surviving vertices, finds a trigger
// (k in-part edges, else a vertex whose potential reaches k alongside the
// triangle guard), extracts a flower through the in-part isolated vertices,
// and retires one flower vertex that is in-part isolated on the currently
// larger side, so the sides never drift out of balance. Retired vertices shed
// only cross edges unless the trigger itself retires.
inline AlgorithmRun algorithm2(const Graph& g, const CutState& cut, const FlowerSpec& spec,
                               const Profile& profile) {
  int n = g.order();
  if (cut.side_mask().width() != n)
    throw input_error("algorithm2: cut and graph orders differ");
  int k = spec.k();
  double thr = profile.bad_threshold(n);
  for (int v = 0; v < n; ++v)
    if (cut.in_degree(v) > thr)
      throw precondition_error("algorithm2: vertex " + std::to_string(v) +
                               " exceeds the bad-degree threshold");
  int m = cut.in_edges(0) + cut.in_edges(1);
  if (m > constants_of(spec).c_h)
    throw precondition_error("algorithm2: in-part mass " + std::to_string(m) +
                             " above the dispatch constant");
  if (std::abs(cut.side_set(0).count() - cut.side_set(1).count()) > 1)
    throw precondition_error("algorithm2: sides out of balance");

  AlgorithmRun run;
  Graph w = g;
  VertexSet alive = g.full_set();
  std::pair<VertexSet, VertexSet> iso{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v)
    if (cut.in_degree(v) == 0) (cut.side(v) == 0 ? iso.first : iso.second).set(v);

  while (true) {
    if (static_cast<long long>(run.iterations) * k > m)
      throw internal_error("algorithm2: iteration budget exceeded");
    auto [c, cmap] = induced_subgraph(w, alive);
    int cn = c.order();
    VertexSet cside1(cn), cu0(cn), cu1(cn);
    for (int i = 0; i < cn; ++i) {
      int ov = cmap[i];
      if (cut.side(ov) == 1) cside1.set(i);
      if (iso.first.test(ov)) cu0.set(i);
      if (iso.second.test(ov)) cu1.set(i);
    }
    CutState ccut(c, cside1);
    int istar = cn - cside1.count() >= cside1.count() ? 0 : 1;

    int cx = -1;
    bool step1 = false;
    for (int i = 0; i < cn; ++i)
      if (ccut.in_degree(i) >= k) {
        cx = i;
        step1 = true;
        break;
      }
    std::pair<VertexSet, VertexSet> cnone{VertexSet(cn), VertexSet(cn)};
    if (cx == -1)
      for (int i = 0; i < cn && cx == -1; ++i) {
        PotentialRecord rec = flower_potential(c, ccut, i, cnone);
        if (rec.in_degree + rec.m_size >= spec.s && rec.total >= k) cx = i;
      }
    if (cx == -1) break;

    FlowerEmbedding cemb;
    try {
      cemb = find_flower_centered(c, ccut, cnone, {cu0, cu1}, cx, spec, profile);
    } catch (const precondition_error& e) {
      run.halt = "iteration " + std::to_string(run.iterations + 1) + ": " + e.what();
      break;
    } catch (const stitch_error& e) {
      run.halt = "iteration " + std::to_string(run.iterations + 1) + ": " + e.what();
      break;
    }
    FlowerEmbedding emb;
    emb.center = cmap[cemb.center];
    for (const auto& cyc : cemb.cycles) {
      std::vector<int> mapped;
      mapped.reserve(cyc.size());
      for (int v : cyc) mapped.push_back(cmap[v]);
      emb.cycles.push_back(std::move(mapped));
    }

    const VertexSet& far = istar == 0 ? iso.first : iso.second;
    int u = -1;
    if (!step1 && cut.side(cmap[cx]) == istar) {
      u = cmap[cx];
    } else {
      for (const auto& cyc : emb.cycles)
        for (int v : cyc)
          if (far.test(v) && (u == -1 || v < u)) u = v;
    }
    if (u == -1) throw internal_error("algorithm2: no retirable vertex on the larger side");

    for (auto e : embedding_edges(emb))
      if (!w.remove_edge(e.u, e.v))
        throw internal_error("algorithm2: extracted edge missing from the working graph");
    VertexSet rest = w.neighbors(u) & alive;
    for (int t = rest.next(0); t != -1; t = rest.next(t + 1)) w.remove_edge(u, t);
    alive.reset(u);
    (cut.side(u) == 0 ? iso.first : iso.second).reset(u);
    run.flowers.push_back(std::move(emb));
    run.deleted.push_back(u);
    ++run.iterations;

    int a0 = alive.count_and(cut.side_set(0));
    int a1 = alive.count_and(cut.side_set(1));
    if (std::abs(a0 - a1) > 1) throw internal_error("algorithm2: sides drifted out of balance");
  }
  run.residual = std::move(w);
  return run;
}

inline AlgorithmRun algorithm2(const Graph& g, const CutState& cut, const FlowerSpec& spec) {
  return algorithm2(g, cut, spec, desk_profile(spec));
}

struct DecompositionResult {
  std::vector<FlowerEmbedding> flowers;
  std::vector<Edge> single_edges;
  int parts = 0;
  int packing = 0;
};

struct DecomposeOptions {
  std::optional<Profile> profile;
  std::uint64_t seed = 2026;
  int cut_restarts = 8;
  long long sweep_budget = 2'000'000;
};

struct DecomposeRun {
  DecompositionResult result;
  std::string branch;  // which extraction loop the dispatch chose
  std::string profile;
  int m = 0;  // in-part edges of the peeled core under the chosen cut
  std::vector<PeelRemoval> peeled;
  std::vector<int> deleted;  // original ids
  int iterations = 0;
  std::string halt;
};

namespace detail {

inline bool is_bipartite(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      auto nb = g.neighbors(v);
      for (int t = nb.next(0); t != -1; t = nb.next(t + 1)) {
        if (color[t] == -1) {
          color[t] = 1 - color[v];
          stack.push_back(t);
        } else if (color[t] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline CutState best_cut(const Graph& g, std::uint64_t seed, int restarts) {
  if (g.order() <= kExactMaxCutCap) return exact_max_cut(g);
  CutState best = local_max_cut(g, seed);
  for (int i = 1; i < restarts; ++i) {
    CutState next = local_max_cut(g, seed + i);
    if (next.cross_edges() > best.cross_edges()) best = next;
  }
  return best;
}

inline void strip_flower(Graph& pool, const FlowerEmbedding& emb) {
  for (auto e : embedding_edges(emb))
    if (!pool.remove_edge(e.u, e.v)) throw internal_error("decompose: flower edge already spent");
}

}  // namespace detail

// Full pipeline: peel the low-degree shell, cut the core, classify by in-part
// mass, run the matching extraction loop, then sweep the unclaimed edges
// greedily until they form a bipartite (hence flower-free) pool. Every edge
// of the input ends up in exactly one flower or one single-edge part.
inline DecomposeRun decompose(const Graph& g, const FlowerSpec& spec,
                              const DecomposeOptions& opts = {}) {
  Profile prof = opts.profile ? *opts.profile : desk_profile(spec);
  DecomposeRun run;
  run.profile = prof.name;
  int k = spec.k();

  PeelResult peel = peel_min_degree(g, PeelMode::kEdgeCount, spec);
  run.peeled = peel.peeled;

  Graph pool = g;  // unclaimed edges
  std::vector<FlowerEmbedding> flowers;

  if (k >= 2 && peel.kept.size() > 0) {
    const Graph& kept = peel.kept;
    CutState cut = detail::best_cut(kept, opts.seed, opts.cut_restarts);
    BadSetState state = bad_set(kept, cut, spec, prof);
    run.m = state.m;
    bool balanced = std::abs(cut.side_set(0).count() - cut.side_set(1).count()) <= 1;
    bool no_bad = state.bad.first.count() == 0 && state.bad.second.count() == 0;
    AlgorithmRun alg;
    if (state.m <= constants_of(spec).c_h && no_bad && balanced) {
      run.branch = "alg2";
      alg = algorithm2(kept, cut, spec, prof);
    } else {
      run.branch = "alg1";
      try {
        Graph g0 = regularize_bad(kept, state, spec);
        alg = algorithm1(g0, state, spec, prof);
      } catch (const precondition_error& e) {
        run.halt = e.what();  // core unusable at this order; the sweep still runs
      }
    }
    if (run.halt.empty()) run.halt = alg.halt;
    run.iterations = alg.iterations;
    for (const auto& cemb : alg.flowers) {
      FlowerEmbedding emb;
      emb.center = peel.map[cemb.center];
      for (const auto& cyc : cemb.cycles) {
        std::vector<int> mapped;
        mapped.reserve(cyc.size());
        for (int v : cyc) mapped.push_back(peel.map[v]);
        emb.cycles.push_back(std::move(mapped));
      }
      if (!verify_embedding(g, spec, emb))
        throw internal_error("decompose: extracted flower does not embed in the input");
      detail::strip_flower(pool, emb);
      flowers.push_back(std::move(emb));
    }
    for (int u : alg.deleted) run.deleted.push_back(peel.map[u]);
  } else {
    run.branch = k >= 2 ? "alg2" : "alg1";
  }

  // Peel casualties and residual leftovers; flowers need an odd cycle, so a
  // bipartite pool is already free.
  while (pool.size() >= spec.edge_count() && !detail::is_bipartite(pool)) {
    SearchResult found = contains_flower(pool, spec, opts.sweep_budget);
    if (found.outcome != SearchOutcome::Found) break;
    detail::strip_flower(pool, *found.embedding);
    flowers.push_back(*found.embedding);
  }

  DecompositionResult& res = run.result;
  res.flowers = std::move(flowers);
  res.single_edges = pool.edges();
  res.packing = static_cast<int>(res.flowers.size());
  res.parts = res.packing + static_cast<int>(res.single_edges.size());
  if (res.parts != g.size() - res.packing * (spec.edge_count() - 1))
    throw internal_error("decompose: part count drifted from the edge budget");
  return run;
}

// Number of parts of a flower-or-edge partition, validated against the graph:
// every flower must embed, every edge must be claimed exactly once.
inline long long phi_of(const DecompositionResult& result, const Graph& g,
                        const FlowerSpec& spec) {
  if (result.packing != static_cast<int>(result.flowers.size()))
    throw input_error("phi_of: packing count disagrees with the flower list");
  Graph pool = g;
  for (const auto& emb : result.flowers) {
    if (!verify_embedding(g, spec, emb)) throw input_error("phi_of: invalid flower part");
    for (auto e : embedding_edges(emb))
      if (!pool.remove_edge(e.u, e.v)) throw input_error("phi_of: edge claimed twice");
  }
  for (auto e : result.single_edges)
    if (!pool.remove_edge(e.u, e.v)) throw input_error("phi_of: edge claimed twice");
  if (pool.size() != 0) throw input_error("phi_of: uncovered edges remain");
  if (result.parts != result.packing + static_cast<int>(result.single_edges.size()))
    throw input_error("phi_of: part count disagrees with the lists");
  return result.parts;
}

}  // namespace flowers
