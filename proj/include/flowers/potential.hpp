#pragma once

// Per-vertex flower potential across a cut, and the threshold profiles that
// decide which vertices count as bad or active at a given order.

#include <cmath>
#include <string>
#include <utility>

#include "flowers/cut.hpp"
#include "flowers/flower_spec.hpp"
#include "flowers/matching.hpp"

namespace flowers {

// Numeric thresholds for the decomposition. "paper" uses the asymptotic
// constants; "desk" substitutes fractions that bite at double-digit orders.
struct Profile {
  std::string name;
  double beta = 0.0;        // in-part degree fraction marking a vertex bad
  double bad_floor = 0.0;   // absolute in-degree floor for badness
  double side_slack = 0.0;  // allowed side imbalance fraction over n/2

  double bad_threshold(int n) const { return std::max(beta * n, bad_floor); }
  double active_threshold(int n) const { return n / 2.0 - 2.0 * beta * n - 0.25; }
  double out_floor_main(int n) const { return 2.0 * n / 5.0; }
  double out_floor_bad(int n) const { return n / 9.0; }
  double side_cap(int n) const { return (0.5 + side_slack) * n; }
  double inactive_cap(int n) const { return side_slack * n; }
};

inline Profile paper_profile(const FlowerSpec& spec) {
  FlowerConstants c = constants_of(spec);
  return {"paper", c.beta, 0.0, std::sqrt(c.gamma)};
}

// Desk thresholds keep every active vertex above the main out-degree floor
// once n >= 13.
inline Profile desk_profile(const FlowerSpec& spec) {
  return {"desk", 0.04, spec.k() + 0.5, 0.2};
}

// Potential of x on side i: in-degree, a maximum matching M inside the
// non-bad out-neighborhood, the own-side remainder away from N_i(x), and
// restricted edges of the other side off V(M). The sum bounds how many
// disjoint petal seeds x can supply.
struct PotentialRecord {
  int side = 0;
  int in_degree = 0;
  int m_size = 0;
  int nu_rest = 0;
  int nu_edge = 0;
  int total = 0;
  Matching matching;  // the M realizing m_size, for downstream reuse
};

inline PotentialRecord flower_potential(const Graph& g, const CutState& cut, int x,
                                        const std::pair<VertexSet, VertexSet>& b_sets) {
  if (x < 0 || x >= g.order())
    throw input_error("flower_potential: vertex " + std::to_string(x) + " out of range");

  PotentialRecord r;
  r.side = cut.side(x);
  VertexSet own = cut.side_set(r.side);
  VertexSet other = cut.side_set(1 - r.side);
  const VertexSet& b_other = r.side == 0 ? b_sets.second : b_sets.first;

  VertexSet in_nbrs = VertexSet(g.neighbors(x) & own);
  r.in_degree = in_nbrs.count();

  VertexSet allowed = VertexSet(g.neighbors(x) & other);
  allowed.subtract(b_other);
  r.matching = max_matching_in(g, allowed);
  r.m_size = static_cast<int>(r.matching.size());

  VertexSet rest = own;
  rest.subtract(in_nbrs);
  r.nu_rest = matching_number_in(g, rest);

  VertexSet a = other;
  for (auto e : r.matching) {
    a.reset(e.u);
    a.reset(e.v);
  }
  r.nu_edge = matching_number_of_edgeset(g, restricted_edge_set(g, a, x));

  r.total = r.in_degree + r.m_size + r.nu_rest + r.nu_edge;
  return r;
}

}  // namespace flowers
