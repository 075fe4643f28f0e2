#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hotruss/bounds.hpp"
#include "hotruss/oracle.hpp"
#include "hotruss/support.hpp"

using namespace hotruss;
using testutil::fig2_edge;
using testutil::fig2_graph;

TEST_CASE("vertex_centric_size") {
  Graph iso = testutil::from_pairs({{0, 1}});
  iso.remove_edge(0);
  CHECK(vertex_centric_size(iso, 0, 2) == 1);

  Graph k4 = testutil::complete_graph(4);
  for (VertexId v = 0; v < 4; ++v) CHECK(vertex_centric_size(k4, v, 2) == 4);

  Graph fig2 = fig2_graph();
  CHECK(vertex_centric_size(fig2, 0, 2) == 6);  // {v0,v1,v2,v3,v7,v8}
  CHECK(vertex_centric_size(fig2, 1, 2) == 4);  // {v0,v1,v4,v17}
}

TEST_CASE("edge_centric_size") {
  Graph single = testutil::from_pairs({{0, 1}});
  CHECK(edge_centric_size(single, 0, 3) == 2);

  Graph tri = testutil::complete_graph(3);
  CHECK(edge_centric_size(tri, 0, 3) == 3);

  Graph p4 = testutil::path_graph(4);
  CHECK(edge_centric_size(p4, *p4.find_edge(1, 2), 3) == 4);
}

TEST_CASE("lower_bound examples") {
  Graph c5 = testutil::cycle_graph(5);
  for (EdgeId e = 0; e < 5; ++e) CHECK(lower_bound(c5, e, 2) == 3);

  Graph k4 = testutil::complete_graph(4);
  for (EdgeId e = 0; e < 6; ++e) CHECK(lower_bound(k4, e, 2) == 4);

  Graph fig2 = fig2_graph();
  CHECK(lower_bound(fig2, fig2_edge(fig2, 0, 1), 2) == 6);
  // delayed-update anchors for the optimized trace
  CHECK(lower_bound(fig2, fig2_edge(fig2, 4, 14), 2) == 5);
  CHECK(lower_bound(fig2, fig2_edge(fig2, 4, 15), 2) == 5);
  CHECK(lower_bound(fig2, fig2_edge(fig2, 8, 13), 2) == 3);
  CHECK(lower_bound(fig2, fig2_edge(fig2, 4, 5), 2) > 5);
}

TEST_CASE("lower_bound parity coherence") {
  auto g = testutil::random_graph(20, 50, 51);
  for (EdgeId e = 0; e < g.edge_slots(); ++e) CHECK(lower_bound(g, e, 1) == 2);
  // tau=2 bound never uses the edge-centric ball: it equals the max over the
  // two endpoint balls and the Delta_1 member balls, all vertex-centric.
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    int lb = lower_bound(g, e, 2);
    int expect = std::max(vertex_centric_size(g, g.edge_u(e), 2),
                          vertex_centric_size(g, g.edge_v(e), 2));
    for (VertexId w : common_neighbors_tau(g, e, 1))
      expect = std::max(expect, vertex_centric_size(g, w, 2));
    CHECK(lb == expect);
  }
}

TEST_CASE("lower_bound monotone under restriction") {
  auto g = testutil::random_graph(18, 48, 53);
  std::mt19937_64 rng(5);
  Graph sub = g;
  for (int drop = 0; drop < 12; ++drop) {
    std::vector<EdgeId> alive;
    for (EdgeId e = 0; e < sub.edge_slots(); ++e)
      if (sub.edge_alive(e)) alive.push_back(e);
    if (alive.size() <= 1) break;
    sub.remove_edge(alive[rng() % alive.size()]);
  }
  for (int tau = 1; tau <= 4; ++tau)
    for (EdgeId e = 0; e < sub.edge_slots(); ++e)
      if (sub.edge_alive(e))
        CHECK(lower_bound(sub, e, tau) <= lower_bound(g, e, tau));
}

TEST_CASE("compute_ub examples") {
  Graph single = testutil::from_pairs({{0, 1}});
  auto sup1 = compute_all_supports(single, 2);
  CHECK(compute_ub(single, 0, 2, sup1.value) == 2);

  Graph k4 = testutil::complete_graph(4);
  auto sup4 = compute_all_supports(k4, 1);
  for (EdgeId e = 0; e < 6; ++e) CHECK(compute_ub(k4, e, 1, sup4.value) == 4);

  Graph c5 = testutil::cycle_graph(5);
  auto sup5 = compute_all_supports(c5, 2);
  for (EdgeId e = 0; e < 5; ++e) CHECK(compute_ub(c5, e, 2, sup5.value) == 5);

  Graph dead = testutil::from_pairs({{0, 1}});
  auto supd = compute_all_supports(dead, 2);
  dead.remove_edge(0);
  CHECK_THROWS_AS(compute_ub(dead, 0, 2, supd.value), std::invalid_argument);
}

TEST_CASE("bound sandwich on random graphs") {
  for (std::uint64_t seed : {61u, 62u, 63u, 64u}) {
    std::mt19937_64 rng(seed);
    std::size_t n = 8 + rng() % 20;
    std::size_t max_m = n * (n - 1) / 2;
    std::size_t m = std::min<std::size_t>(max_m, n + rng() % (2 * n));
    auto g = testutil::random_graph(n, m, seed);
    for (int tau = 1; tau <= 4; ++tau) {
      auto exact = oracle::decompose_naive(g, tau);
      auto sup = compute_all_supports(g, tau);
      for (EdgeId e = 0; e < g.edge_slots(); ++e) {
        int lb = lower_bound(g, e, tau);
        int ub = compute_ub(g, e, tau, sup.value);
        CHECK(2 <= lb);
        CHECK(lb <= exact.phi[e]);
        CHECK(exact.phi[e] <= ub);
      }
    }
  }
}
