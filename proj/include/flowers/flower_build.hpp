#pragma once

// Constructive flower extraction at a prescribed center. Given a cut, its
// bad and active vertex sets, and a center whose potential clears the spec's
// floor, builds an embedding that spends exactly k in-part edges, one per
// cycle. Throws precondition_error (naming the clause) when the hypothesis
// fails and stitch_error when the host is too threadbare to route the
// connecting paths; a returned embedding is always verified.
//
// Measured floor under the desk profile: with k = 2 specs, balanced complete
// bipartite hosts carry every seed kind from n = 10 up; n = 8 strands the
// far-side matching seed mid-path. Richer specs need proportionally more
// fresh vertices, roughly 2 * (k + sum of cycle lengths).

#include <string>
#include <utility>
#include <vector>

#include "flowers/embedding.hpp"
#include "flowers/potential.hpp"

namespace flowers {

namespace detail {

// One in-part edge (or in-neighbor) reserved for a cycle.
struct PetalSeed {
  enum Kind { kMatched, kInNeighbor, kOwnRemainder, kRestricted };
  Kind kind = kMatched;
  int a = -1;  // kInNeighbor: the neighbor; edge kinds: endpoint listed first
  int b = -1;
};

class FlowerStitcher {
 public:
  FlowerStitcher(const Graph& g, const CutState& cut,
                 const std::pair<VertexSet, VertexSet>& b_sets,
                 const std::pair<VertexSet, VertexSet>& u_sets, int x)
      : g_(g), cut_(cut), x_(x), used_(g.order()) {
    for (int i = 0; i < 2; ++i) {
      VertexSet side = cut.side_set(i);
      const VertexSet& b = i == 0 ? b_sets.first : b_sets.second;
      const VertexSet& u = i == 0 ? u_sets.first : u_sets.second;
      pool_[i] = VertexSet(u);
      pool_[i].subtract(b);
      fallback_[i] = side;
      fallback_[i].subtract(b);
    }
    used_.set(x);
  }

  void reserve(int v) {
    if (used_.test(v))
      throw internal_error("seed vertex " + std::to_string(v) + " reserved twice");
    used_.set(v);
  }

  // Fills the -1 slots of cycle in place. Slot sides alternate; the walk
  // closes back to the center, so the last slot also needs an edge to x.
  void fill(std::vector<int>& cycle, int cycle_index) {
    if (!extend(cycle, first_free(cycle)))
      throw stitch_error("cycle " + std::to_string(cycle_index) +
                         " cannot be routed through the active vertices");
  }

 private:
  static std::size_t first_free(const std::vector<int>& cycle) {
    std::size_t i = 0;
    while (i < cycle.size() && cycle[i] != -1) ++i;
    return i;
  }

  bool extend(std::vector<int>& cycle, std::size_t pos) {
    if (pos == cycle.size()) return true;
    int prev = cycle[pos - 1];
    if (cycle[pos] != -1)
      return g_.has_edge(prev, cycle[pos]) && extend(cycle, pos + 1);
    bool last = pos + 1 == cycle.size();
    int want = 1 - cut_.side(prev);

    Bitvec cand = g_.neighbors(prev) & pool_[want];
    cand.subtract(used_);
    if (last) cand &= g_.neighbors(x_);
    if (try_candidates(cand, cycle, pos)) return true;
    if (last) {
      // Final hop may settle for an inactive (but never bad) vertex.
      Bitvec relax = g_.neighbors(prev) & fallback_[want];
      relax.subtract(used_);
      relax &= g_.neighbors(x_);
      relax.subtract(pool_[want]);
      if (try_candidates(relax, cycle, pos)) return true;
    }
    return false;
  }

  bool try_candidates(const Bitvec& cand, std::vector<int>& cycle, std::size_t pos) {
    for (int v = cand.next(); v != -1; v = cand.next(v + 1)) {
      cycle[pos] = v;
      used_.set(v);
      if (extend(cycle, pos + 1)) return true;
      used_.reset(v);
      cycle[pos] = -1;
    }
    return false;
  }

  const Graph& g_;
  const CutState& cut_;
  int x_;
  VertexSet used_;
  VertexSet pool_[2];
  VertexSet fallback_[2];
};

}  // namespace detail

inline FlowerEmbedding find_flower_centered(const Graph& g, const CutState& cut,
                                            const std::pair<VertexSet, VertexSet>& b_sets,
                                            const std::pair<VertexSet, VertexSet>& u_sets,
                                            int x, const FlowerSpec& spec,
                                            const Profile& profile) {
  const int n = g.order();
  const int k = spec.k();
  if (x < 0 || x >= n)
    throw input_error("find_flower_centered: vertex " + std::to_string(x) + " out of range");
  if (cut.graph().order() != n) throw input_error("cut built over a different order");

  VertexSet sides[2] = {cut.side_set(0), cut.side_set(1)};
  const VertexSet* bs[2] = {&b_sets.first, &b_sets.second};
  const VertexSet* us[2] = {&u_sets.first, &u_sets.second};
  for (int i = 0; i < 2; ++i) {
    if (!bs[i]->subset_of(sides[i]))
      throw input_error("bad set " + std::to_string(i) + " leaves its side");
    if (!us[i]->subset_of(sides[i]))
      throw input_error("active set " + std::to_string(i) + " leaves its side");
  }

  for (int i = 0; i < 2; ++i)
    if (sides[i].count() > profile.side_cap(n))
      throw precondition_error("side size: side " + std::to_string(i) + " has " +
                               std::to_string(sides[i].count()) + " vertices, cap " +
                               std::to_string(profile.side_cap(n)));

  for (int i = 0; i < 2; ++i)
    for (int u = bs[i]->next(); u != -1; u = bs[i]->next(u + 1))
      if (g.neighbors(u).intersects(*bs[i]))
        throw precondition_error("bad set independence: vertex " + std::to_string(u) +
                                 " has a bad neighbor");

  int bad_total = bs[0]->count() + bs[1]->count();
  if (bad_total * profile.bad_threshold(n) > 2.0 * g.size())
    throw precondition_error("bad set size: " + std::to_string(bad_total) +
                             " vertices exceed the degree-sum bound");

  for (int v = 0; v < n; ++v) {
    bool bad = bs[cut.side(v)]->test(v);
    double need = bad ? profile.out_floor_bad(n) : profile.out_floor_main(n);
    if (cut.out_degree(v) <= need)
      throw precondition_error("out-degree floor: vertex " + std::to_string(v) + " has " +
                               std::to_string(cut.out_degree(v)) + ", needs more than " +
                               std::to_string(need));
  }

  for (int i = 0; i < 2; ++i) {
    VertexSet idle = sides[i];
    idle.subtract(*us[i]);
    if (idle.count() >= profile.inactive_cap(n))
      throw precondition_error("inactive vertices: side " + std::to_string(i) + " has " +
                               std::to_string(idle.count()) + ", cap " +
                               std::to_string(profile.inactive_cap(n)));
  }

  const int xi = cut.side(x);
  PotentialRecord pot = flower_potential(g, cut, x, b_sets);
  const bool x_bad = bs[xi]->test(x);
  if (x_bad) {
    if (pot.in_degree < k)
      throw precondition_error("bad center in-degree: " + std::to_string(pot.in_degree) +
                               " below k = " + std::to_string(k));
  } else {
    if (pot.in_degree + pot.m_size < spec.s)
      throw precondition_error("triangle seeds: in-degree plus matching is " +
                               std::to_string(pot.in_degree + pot.m_size) + ", below s = " +
                               std::to_string(spec.s));
    if (pot.total < k)
      throw precondition_error("total potential: " + std::to_string(pot.total) +
                               " below k = " + std::to_string(k));
  }

  using detail::PetalSeed;
  std::vector<PetalSeed> seeds;
  VertexSet in_nbrs = VertexSet(g.neighbors(x) & sides[xi]);
  if (pot.in_degree >= k) {
    for (int v = in_nbrs.next(); v != -1 && static_cast<int>(seeds.size()) < k;
         v = in_nbrs.next(v + 1))
      seeds.push_back({PetalSeed::kInNeighbor, v, -1});
  } else {
    for (auto e : pot.matching) seeds.push_back({PetalSeed::kMatched, e.u, e.v});
    for (int v = in_nbrs.next(); v != -1; v = in_nbrs.next(v + 1))
      seeds.push_back({PetalSeed::kInNeighbor, v, -1});
    VertexSet rest = sides[xi];
    rest.subtract(in_nbrs);
    for (auto e : max_matching_in(g, rest))
      seeds.push_back({PetalSeed::kOwnRemainder, e.u, e.v});
    VertexSet a = sides[1 - xi];
    for (auto e : pot.matching) {
      a.reset(e.u);
      a.reset(e.v);
    }
    for (auto e : max_matching_of_edges(n, restricted_edge_set(g, a, x))) {
      // Lead endpoint must see x; prefer the lower id when both do.
      bool ue = g.has_edge(x, e.u), ve = g.has_edge(x, e.v);
      if (ue)
        seeds.push_back({PetalSeed::kRestricted, e.u, e.v});
      else if (ve)
        seeds.push_back({PetalSeed::kRestricted, e.v, e.u});
      else
        throw internal_error("restricted edge misses the center's neighborhood");
    }
    seeds.resize(k);
  }

  detail::FlowerStitcher stitcher(g, cut, b_sets, u_sets, x);
  for (const auto& sd : seeds) {
    stitcher.reserve(sd.a);
    if (sd.b != -1) stitcher.reserve(sd.b);
  }

  FlowerEmbedding emb;
  emb.center = x;
  auto lengths = spec.all_lengths();
  for (std::size_t c = 0; c < lengths.size(); ++c) {
    const PetalSeed& sd = seeds[c];
    int q = lengths[c];
    if (q == 3 && sd.kind != PetalSeed::kMatched && sd.kind != PetalSeed::kInNeighbor)
      throw internal_error("triangle drawn against an edge seed it cannot close");
    std::vector<int> cyc;
    cyc.reserve(q);
    cyc.push_back(x);
    switch (sd.kind) {
      case PetalSeed::kMatched:
      case PetalSeed::kRestricted:
        if (q == 3 && sd.kind == PetalSeed::kMatched && g.has_edge(x, sd.b)) {
          cyc = {x, sd.a, sd.b};
        } else {
          cyc.push_back(sd.a);
          cyc.push_back(sd.b);
          cyc.resize(q, -1);
        }
        break;
      case PetalSeed::kInNeighbor:
        cyc.push_back(sd.a);
        cyc.resize(q, -1);
        break;
      case PetalSeed::kOwnRemainder:
        cyc.push_back(-1);
        cyc.push_back(sd.a);
        cyc.push_back(sd.b);
        cyc.resize(q, -1);
        break;
    }
    if (static_cast<int>(cyc.size()) != q || cyc[0] != x)
      throw internal_error("cycle template has the wrong shape");
    stitcher.fill(cyc, static_cast<int>(c));
    emb.cycles.push_back(std::move(cyc));
  }

  if (auto defect = embedding_defect(g, spec, emb))
    throw internal_error("constructed flower rejected: " + *defect);

  int in_part = 0;
  bool touched[2] = {false, false};
  for (const auto& cyc : emb.cycles)
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      int v = cyc[j];
      if (v != x) touched[cut.side(v)] = touched[cut.side(v)] || us[cut.side(v)]->test(v);
      int w = cyc[(j + 1) % cyc.size()];
      if (cut.side(v) == cut.side(w)) ++in_part;
    }
  if (in_part != k)
    throw internal_error("flower spends " + std::to_string(in_part) +
                         " in-part edges, wants " + std::to_string(k));
  if (!touched[1 - xi]) throw internal_error("flower misses the far active set");
  if (pot.in_degree >= k && !(touched[0] && touched[1]))
    throw internal_error("high in-degree flower misses an active set");

  return emb;
}

inline FlowerEmbedding find_flower_centered(const Graph& g, const CutState& cut,
                                            const std::pair<VertexSet, VertexSet>& b_sets,
                                            const std::pair<VertexSet, VertexSet>& u_sets,
                                            int x, const FlowerSpec& spec) {
  return find_flower_centered(g, cut, b_sets, u_sets, x, spec, desk_profile(spec));
}

}  // namespace flowers
