#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "flowers/decompose.hpp"
#include "flowers/enumerate.hpp"
#include "flowers/extremal.hpp"
#include "flowers/flower_build.hpp"
#include "flowers/graph6.hpp"
#include "flowers/oracle.hpp"

namespace flowers {

struct PropertyResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string counterexample;  // graph6 of the first violation, empty when none
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::deque<PropertyResult> properties;  // deque: add() hands out stable references
  bool pass = true;

  PropertyResult& add(std::string name) {
    properties.push_back({std::move(name), true, 0, "", ""});
    return properties.back();
  }
  void fail(PropertyResult& p, const Graph& g, std::string detail) {
    if (p.pass) {
      p.pass = false;
      p.counterexample = graph6_encode(g);
      p.detail = std::move(detail);
    }
    pass = false;
  }
  void fail(PropertyResult& p, std::string detail) {
    if (p.pass) {
      p.pass = false;
      p.detail = std::move(detail);
    }
    pass = false;
  }
};

namespace detail {

inline Graph random_graph_with_edges(int n, long long m, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (m > static_cast<long long>(pairs.size()))
    throw input_error("edge target exceeds the complete graph");
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Graph g(n);
  for (long long i = 0; i < m; ++i) g.add_edge(pairs[i].first, pairs[i].second);
  return g;
}

inline std::vector<FlowerSpec> family_suite_specs() {
  return {spec_new(0, 1, {5}), spec_new(1, 1, {5}), spec_new(0, 2, {5, 5}),
          spec_new(2, 1, {7}), spec_new(3, 1, {5})};
}

}  // namespace detail

// Closed-form values: the triangle threshold branches, the matching-degree
// edge cap with its printed evaluations and linear bound, the dispatch
// constant, and the extremal edge formula against its Turan base.
inline SuiteResult verify_formulas() {
  SuiteResult out;
  out.suite = "formulas";

  auto& branches = out.add("triangle threshold branches");
  for (int k = 1; k <= 8; ++k) {
    ++branches.cases;
    long long expect = k % 2 == 1 ? static_cast<long long>(k) * k - k
                                  : static_cast<long long>(k) * k - 3 * k / 2;
    if (g_of_k(k) != expect)
      out.fail(branches, "g(" + std::to_string(k) + ") = " + std::to_string(g_of_k(k)));
  }
  if (g_of_k(3) != 6) out.fail(branches, "g(3) off its printed value");
  if (g_of_k(4) != 10) out.fail(branches, "g(4) off its printed value");

  auto& cap_values = out.add("matching-degree cap values");
  cap_values.cases = 2;
  if (chvatal_hanson_f(3, 2) != 9) out.fail(cap_values, "f(3,2) != 9");
  if (chvatal_hanson_f(1, 1) != 1) out.fail(cap_values, "f(1,1) != 1");

  auto& cap_bound = out.add("matching-degree cap linear bound");
  for (int nu = 1; nu <= 50; ++nu)
    for (int delta = 1; delta <= 50; ++delta) {
      ++cap_bound.cases;
      if (chvatal_hanson_f(nu, delta) > static_cast<long long>(nu) * (delta + 1))
        out.fail(cap_bound, "f(" + std::to_string(nu) + "," + std::to_string(delta) +
                                ") above nu*(delta+1)");
    }

  auto& dispatch = out.add("dispatch constant");
  dispatch.cases = 3;
  double c21 = constants_of(spec_new(1, 1, {5})).c_h;
  if (c21 < 52.0 / 3.0 - 1e-9 || c21 > 52.0 / 3.0 + 1e-9) out.fail(dispatch, "spec 1,1:5");
  double c31 = constants_of(spec_new(3, 1, {5})).c_h;
  if (c31 < 110.4 - 1e-9 || c31 > 110.4 + 1e-9) out.fail(dispatch, "spec 3,1:5");
  if (constants_of(spec_new(0, 1, {5})).c_h != 0.0) out.fail(dispatch, "k = 1 must give 0");

  auto& extremal = out.add("extremal formula over the Turan base");
  for (const FlowerSpec& spec : detail::family_suite_specs()) {
    long long block = static_cast<long long>(spec.k() - 1) * (spec.k() - 1);
    for (int n = 10; n <= 30; ++n) {
      ++extremal.cases;
      if (ex_formula(n, spec) != turan_edge_count(n, 2) + block)
        out.fail(extremal, "offset drifted at n = " + std::to_string(n));
    }
  }
  if (ex_formula(20, spec_new(1, 1, {5})) != 101) out.fail(extremal, "printed value at n = 20");
  return out;
}

// Exhaustive tightness of the matching-degree cap: over every graph of order
// at most max_n with matching number and maximum degree within each grid
// cell, the top edge count equals the closed form.
inline SuiteResult verify_lemma1(int max_nu = 3, int max_delta = 3, int max_n = 9) {
  if (max_n > kEnumerationCap) throw cap_error("order above the enumeration cap");
  SuiteResult out;
  out.suite = "lemma1";
  for (int nu = 1; nu <= max_nu; ++nu)
    for (int delta = 1; delta <= max_delta; ++delta) {
      auto& cell = out.add("tight at nu<=" + std::to_string(nu) + " delta<=" +
                           std::to_string(delta));
      long long best = 0;
      for (int n = 1; n <= max_n; ++n) {
        EnumerationFilters filters;
        filters.nu_cap = nu;
        filters.max_degree = delta;
        for (const auto& sg : enumerate_graphs(n, filters)) {
          ++cell.cases;
          best = std::max(best, static_cast<long long>(sg.to_graph().size()));
        }
      }
      if (best != chvatal_hanson_f(nu, delta))
        out.fail(cell, "max " + std::to_string(best) + " vs f = " +
                           std::to_string(chvatal_hanson_f(nu, delta)));
    }
  return out;
}

// Degree-sum bound: over every graph of order at most max_n and every valid
// truncation level, the truncated degree sum stays within nu * (maxdeg + b).
inline SuiteResult verify_lemma2(int max_n = 8) {
  if (max_n > kEnumerationCap) throw cap_error("order above the enumeration cap");
  SuiteResult out;
  out.suite = "lemma2";
  auto& bound = out.add("truncated degree-sum bound");
  for (int n = 1; n <= max_n; ++n)
    for (const auto& sg : enumerate_graphs(n)) {
      Graph g = sg.to_graph();
      int delta = 0;
      for (int v = 0; v < n; ++v) delta = std::max(delta, g.degree(v));
      for (int b = 0; b <= delta - 2; ++b) {
        ++bound.cases;
        if (!lemma2_bound_holds(g, b)) {
          out.fail(bound, g, "b = " + std::to_string(b));
          return out;
        }
      }
    }
  return out;
}

// Matching floor for unions of paths and cycles: 2 * nu >= order - components
// over every graph with max degree 2 and no isolated vertex.
inline SuiteResult verify_obs1(int max_n = 9) {
  if (max_n > kEnumerationCap) throw cap_error("order above the enumeration cap");
  SuiteResult out;
  out.suite = "obs1";
  auto& floor_ = out.add("matching floor from components");
  for (int n = 2; n <= max_n; ++n) {
    EnumerationFilters filters;
    filters.min_degree = 1;
    filters.max_degree = 2;
    for (const auto& sg : enumerate_graphs(n, filters)) {
      ++floor_.cases;
      Graph g = sg.to_graph();
      if (2 * matching_number(g) < n - component_count(g)) {
        out.fail(floor_, g, "order " + std::to_string(n));
        return out;
      }
    }
  }
  return out;
}

// Peeling on random hosts built with a fixed edge surplus over the Turan
// count: the kept core meets the half-order degree floor and retains the
// surplus plus one edge per removal.
inline SuiteResult verify_lemma5(int instances = 200, int max_n = 60,
                                 std::uint64_t seed = 2026) {
  SuiteResult out;
  out.suite = "lemma5";
  auto& floor_ = out.add("kept core degree floor");
  auto& surplus = out.add("kept core edge surplus");
  std::mt19937_64 rng(seed);
  FlowerSpec spec = spec_new(1, 1, {5});
  for (int i = 0; i < instances; ++i) {
    int n = 10 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 9));
    long long base = static_cast<long long>(n) * n / 4;
    long long slack = static_cast<long long>(n) * (n - 1) / 2 - base;
    long long j = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(
                          std::min<long long>(15, slack)));
    Graph g = detail::random_graph_with_edges(n, base + j, rng);
    PeelResult r = peel_min_degree(g, PeelMode::kEdgeCount, spec);
    ++floor_.cases;
    ++surplus.cases;
    for (int v = 0; v < r.kept.order(); ++v)
      if (r.kept.degree(v) < r.n_prime / 2) {
        out.fail(floor_, g, "vertex below half order after peel");
        return out;
      }
    long long kept_floor = static_cast<long long>(r.n_prime) * r.n_prime / 4 + j + (n - r.n_prime);
    if (r.kept.size() < kept_floor) {
      out.fail(surplus, g, "kept " + std::to_string(r.kept.size()) + " vs floor " +
                               std::to_string(kept_floor));
      return out;
    }
  }
  return out;
}

// Exhaustive edge bound for graphs meeting the sparse-neighbourhood
// hypothesis, with the equality witness split at three triangles.
inline SuiteResult verify_lemma7(int s, int t, long long budget = kDefaultOracleBudget) {
  SuiteResult out;
  out.suite = "lemma7";
  Lemma7Report rep = lemma7_exhaustive(s, t, budget);
  auto& bound = out.add("edge bound (k-1)^2");
  bound.cases = rep.graphs_checked;
  long long cap = static_cast<long long>(rep.k - 1) * (rep.k - 1);
  if (!rep.bound_holds || rep.max_edges != cap)
    out.fail(bound, "max " + std::to_string(rep.max_edges) + " vs " + std::to_string(cap));
  auto& witnesses = out.add("equality witness set");
  witnesses.cases = static_cast<long long>(rep.witnesses.size());
  if (!rep.witnesses_match) out.fail(witnesses, "unexpected equality case");
  return out;
}

// Every constructible member of the extremal family matches the closed edge
// count and is flower-free within budget.
inline SuiteResult verify_lemma8(int min_n = 14, int max_n = 24,
                                 long long budget = kDefaultSearchBudget) {
  SuiteResult out;
  out.suite = "lemma8";
  for (const FlowerSpec& spec : detail::family_suite_specs()) {
    auto& prop = out.add("family " + spec.format() + " extremal and free");
    for (int n = min_n; n <= max_n; ++n) {
      for (auto tag : {ExtremalFamilyVariant::BipartiteBlock,
                       ExtremalFamilyVariant::ThreeTriangles}) {
        if (tag == ExtremalFamilyVariant::ThreeTriangles && !(spec.s == 3 && spec.t == 1))
          continue;
        Graph g;
        try {
          g = build_family_member(n, spec, {tag, 0});
        } catch (const input_error&) {
          continue;  // block does not fit at this order
        }
        ++prop.cases;
        if (g.size() != ex_formula(n, spec)) {
          out.fail(prop, g, "edge count off at n = " + std::to_string(n));
          break;
        }
        SearchResult res = contains_flower(g, spec, budget);
        if (res.outcome != SearchOutcome::Free) {
          out.fail(prop, g, res.outcome == SearchOutcome::Found
                                ? "member contains a flower"
                                : "search budget exhausted");
          break;
        }
      }
    }
  }
  return out;
}

// Bad-set smallness: the threshold definition is pointwise, the degree-sum
// bound caps the bad population, and on sparse-in-part hosts the strict
// profile meets its closed-form ceiling.
inline SuiteResult verify_lemma9(std::uint64_t seed = 2026) {
  SuiteResult out;
  out.suite = "lemma9";
  FlowerSpec spec = spec_new(1, 1, {5});

  auto& strict = out.add("strict profile ceiling on a clean host");
  strict.cases = 1;
  {
    Graph g = turan_graph(40, 2);
    VertexSet side1(40);
    for (int v = 1; v < 40; v += 2) side1.set(v);
    CutState cut(g, side1);
    Profile prof = paper_profile(spec);
    BadSetState st = bad_set(g, cut, spec, prof);
    FlowerConstants c = constants_of(spec);
    int total = st.bad.first.count() + st.bad.second.count();
    bool hypothesis = st.m <= c.gamma * 40 * 40;
    if (hypothesis && !(total <= 2.0 * st.m / (prof.beta * 40) + 1e-9 &&
                        total < 2.0 * c.gamma * 40 / c.beta))
      out.fail(strict, g, "ceiling missed");
  }

  auto& pointwise = out.add("threshold definition is pointwise");
  auto& degree_sum = out.add("degree-sum population bound");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 10; ++i) {
    int n = 20 + static_cast<int>(rng() % 21);
    Graph g = detail::random_graph_with_edges(n, static_cast<long long>(n) * n / 5, rng);
    CutState cut = local_max_cut(g, rng());
    BadSetState st = bad_set(g, cut, spec, desk_profile(spec));
    ++pointwise.cases;
    for (int v = 0; v < n; ++v) {
      bool flagged = cut.side(v) == 0 ? st.bad.first.test(v) : st.bad.second.test(v);
      if (flagged != (cut.in_degree(v) > st.threshold)) {
        out.fail(pointwise, g, "vertex " + std::to_string(v));
        return out;
      }
    }
    ++degree_sum.cases;
    int total = st.bad.first.count() + st.bad.second.count();
    if (total * st.threshold > 2.0 * st.m + 1e-9) {
      out.fail(degree_sum, g, "population above the degree sum");
      return out;
    }
  }
  return out;
}

// Extraction contract on planted hosts: a center holding k in-part edges
// yields a flower spending exactly k in-part edges and touching both fresh
// pools; a k-matching trigger spends through its common out-neighbour; clean
// hosts offer no trigger at all.
inline SuiteResult verify_lemma10(std::uint64_t = 2026) {
  SuiteResult out;
  out.suite = "lemma10";
  FlowerSpec spec = spec_new(1, 1, {5});
  Profile prof = desk_profile(spec);
  int n = 40;
  VertexSet side1(n);
  for (int v = 1; v < n; v += 2) side1.set(v);

  auto in_part_spend = [&](const FlowerEmbedding& emb) {
    int spent = 0;
    for (auto e : embedding_edges(emb))
      if (side1.test(e.u) == side1.test(e.v)) ++spent;
    return spent;
  };
  auto u_sets_of = [&](const Graph& g, const CutState& cut) {
    std::pair<VertexSet, VertexSet> u{cut.side_set(0), cut.side_set(1)};
    for (int v = 0; v < g.order(); ++v)
      if (cut.out_degree(v) < prof.active_threshold(n)) (cut.side(v) == 0 ? u.first : u.second).reset(v);
    return u;
  };

  auto& heavy = out.add("heavy center spends k in-part edges");
  heavy.cases = 1;
  {
    Graph g = turan_graph(n, 2);
    g.add_edge(0, 4);
    g.add_edge(0, 6);
    g.add_edge(2, 4);
    g.add_edge(2, 6);
    CutState cut(g, side1);
    std::pair<VertexSet, VertexSet> none{VertexSet(n), VertexSet(n)};
    auto u = u_sets_of(g, cut);
    FlowerEmbedding emb = find_flower_centered(g, cut, none, u, 0, spec, prof);
    bool touched_far = false;
    for (const auto& cyc : emb.cycles)
      for (int v : cyc)
        if (u.second.test(v)) touched_far = true;
    if (!verify_embedding(g, spec, emb) || in_part_spend(emb) != spec.k() || !touched_far)
      out.fail(heavy, g, "extraction broke its contract");
  }

  auto& matching = out.add("matching trigger spends through the common out-neighbour");
  matching.cases = 1;
  {
    Graph g = turan_graph(n, 2);
    g.add_edge(0, 2);
    g.add_edge(4, 6);
    CutState cut(g, side1);
    std::pair<VertexSet, VertexSet> none{VertexSet(n), VertexSet(n)};
    FlowerEmbedding emb = find_flower_centered(g, cut, none, u_sets_of(g, cut), 1, spec, prof);
    if (!verify_embedding(g, spec, emb) || in_part_spend(emb) != spec.k() || emb.center != 1)
      out.fail(matching, g, "extraction broke its contract");
  }

  auto& clean = out.add("clean hosts offer no trigger");
  clean.cases = 1;
  {
    Graph g = turan_graph(n, 2);
    CutState cut(g, side1);
    std::pair<VertexSet, VertexSet> none{VertexSet(n), VertexSet(n)};
    bool triggered = false;
    for (int x = 0; x < n && !triggered; ++x) {
      PotentialRecord rec = flower_potential(g, cut, x, none);
      triggered = rec.in_degree >= spec.k() ||
                  (rec.in_degree + rec.m_size >= spec.s && rec.total >= spec.k());
    }
    if (triggered) out.fail(clean, g, "spurious trigger");
    try {
      find_flower_centered(g, cut, none, u_sets_of(g, cut), 0, spec, prof);
      out.fail(clean, g, "extraction succeeded without a trigger");
    } catch (const precondition_error&) {
    }
  }
  return out;
}

}  // namespace flowers
