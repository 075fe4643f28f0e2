#pragma once

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hotruss/generator.hpp"
#include "hotruss/graph.hpp"
#include "hotruss/result.hpp"

namespace testutil {

using hotruss::Graph;
using hotruss::Label;

inline Graph from_pairs(std::vector<std::pair<Label, Label>> pairs) {
  return Graph::from_edges(pairs);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<Label, Label>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_pairs(e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<Label, Label>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_pairs(e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<Label, Label>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_pairs(e);
}

/// Center is label 0, leaves are 1..leaves.
inline Graph star_graph(int leaves) {
  std::vector<std::pair<Label, Label>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return from_pairs(e);
}

inline Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  return from_pairs(hotruss::generate_uniform_random(n, m, seed));
}

/// The 18-vertex worked example (tau = 2) reconstructed from its described
/// neighborhoods, supports, bounds and peeling trace. Known ground truth:
///   N_2(v0) = {v1..v8, v12, v13, v17};  sup_2((v0,v1)) = 7
///   |Omega(v0)| = 6;  lower bound of (v0,v1) at tau=2 is 6
///   min support = 2, attained only by (v15,v16);  phi_2((v15,v16)) = 4
inline std::vector<std::pair<Label, Label>> fig2_pairs() {
  // Ordered so vertices first appear in increasing label order, making
  // internal ids coincide with labels.
  return {
      {0, 1},  {0, 2},  {0, 3},  {1, 4},   {2, 5},   {2, 6},   {0, 7},
      {0, 8},  {5, 9},  {5, 10}, {5, 11},  {7, 12},  {8, 13},  {4, 14},
      {4, 15}, {15, 16}, {1, 17}, {2, 3},  {3, 5},   {3, 6},   {4, 5},
      {5, 6},  {5, 7},  {6, 7},  {6, 9},   {6, 10},  {6, 11},  {9, 10},
      {9, 11}, {10, 11}, {12, 13}, {14, 15}, {14, 17},
  };
}

inline Graph fig2_graph() { return from_pairs(fig2_pairs()); }

/// Edge id lookup by labels; labels here coincide with internal ids because
/// fig2_pairs lists vertices in increasing first-seen order.
inline hotruss::EdgeId fig2_edge(const Graph& g, Label a, Label b) {
  auto u = g.find_vertex(a), v = g.find_vertex(b);
  REQUIRE(u.has_value());
  REQUIRE(v.has_value());
  auto e = g.find_edge(*u, *v);
  REQUIRE(e.has_value());
  return *e;
}

/// phi values keyed by sorted label pair, for comparisons that must survive
/// edge-id reassignment.
inline std::map<std::pair<Label, Label>, int> phi_by_labels(
    const Graph& g, const hotruss::TrussResult& res) {
  std::map<std::pair<Label, Label>, int> out;
  for (hotruss::EdgeId e = 0; e < res.phi.size(); ++e) {
    if (res.phi[e] == hotruss::TrussResult::kUnset) continue;
    Label a = g.label(g.edge_u(e)), b = g.label(g.edge_v(e));
    if (a > b) std::swap(a, b);
    out[{a, b}] = res.phi[e];
  }
  return out;
}

}  // namespace testutil
