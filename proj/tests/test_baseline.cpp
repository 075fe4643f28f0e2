#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"
#include "hotruss/baseline.hpp"
#include "hotruss/oracle.hpp"

using namespace hotruss;
using testutil::fig2_edge;
using testutil::fig2_graph;

TEST_CASE("hot_decompose small closed forms") {
  Graph k4 = testutil::complete_graph(4);
  auto [r4, s4] = hot_decompose(k4, 1);
  for (EdgeId e = 0; e < 6; ++e) CHECK(r4.phi[e] == 4);

  Graph c5 = testutil::cycle_graph(5);
  auto [r5, s5] = hot_decompose(c5, 2);
  for (EdgeId e = 0; e < 5; ++e) CHECK(r5.phi[e] == 5);

  Graph p4 = testutil::path_graph(4);
  auto [rp, sp] = hot_decompose(p4, 2);
  for (EdgeId e = 0; e < 3; ++e) CHECK(rp.phi[e] == 3);

  Graph empty = testutil::from_pairs({});
  auto [re, se] = hot_decompose(empty, 2);
  CHECK(re.phi.empty());
}

TEST_CASE("hot_decompose fig2") {
  Graph g = fig2_graph();
  EdgeId weak = fig2_edge(g, 15, 16);
  auto [res, stats] = hot_decompose(g, 2);
  CHECK(res.phi[weak] == 4);
  CHECK(res.order.front() == weak);  // unique minimum-support edge goes first
  CHECK(stats.edges_peeled == 33);

  Graph g2 = fig2_graph();
  auto exact = oracle::decompose_naive(g2, 2);
  CHECK(res.phi == exact.phi);
}

TEST_CASE("first removal's update scope on fig2") {
  // Removing (v15,v16) puts exactly {v4,v14} in its 2-hop common
  // neighborhood, so the candidate edges are (v4,v14), (v4,v15), (v14,v15),
  // and the support of (v14,v15) drops from 5 to 4.
  Graph g = fig2_graph();
  EdgeId weak = fig2_edge(g, 15, 16);
  auto delta = common_neighbors_tau(g, weak, 2);
  std::set<VertexId> scope(delta.begin(), delta.end());
  CHECK(scope == std::set<VertexId>{4, 14});

  EdgeId e_14_15 = fig2_edge(g, 14, 15);
  CHECK(support_tau(g, e_14_15, 2) == 5);
  g.remove_edge(weak);
  CHECK(support_tau(g, e_14_15, 2) == 4);
  CHECK(support_tau(g, fig2_edge(g, 4, 14), 2) == 4);
  CHECK(support_tau(g, fig2_edge(g, 4, 15), 2) == 4);
}

TEST_CASE("oracle equivalence on random graphs") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 12; ++rep) {
    std::size_t n = 5 + rng() % 30;
    std::size_t max_m = n * (n - 1) / 2;
    std::size_t m = 1 + rng() % std::min<std::size_t>(max_m, 3 * n);
    auto g = testutil::random_graph(n, m, rng());
    for (int tau = 1; tau <= 4; ++tau) {
      auto exact = oracle::decompose_naive(g, tau);
      auto [res, stats] = hot_decompose(g, tau);
      INFO("n=" << n << " m=" << m << " tau=" << tau);
      CHECK(res.phi == exact.phi);
    }
  }
}

TEST_CASE("tau=1 reduces to classic truss decomposition") {
  for (std::uint64_t seed : {3u, 14u, 15u}) {
    auto g = testutil::random_graph(25, 70, seed);
    auto classic = oracle::classic_truss_decompose(g);
    auto [res, stats] = hot_decompose(g, 1);
    CHECK(res.phi == classic.phi);
  }
}

TEST_CASE("membership consistency of every level") {
  auto g = testutil::random_graph(20, 55, 91);
  for (int tau = 1; tau <= 3; ++tau) {
    auto [res, stats] = hot_decompose(g, tau);
    for (int k = 2; k <= res.k_max(); ++k) {
      auto members = res.edges_with_phi_at_least(k);
      if (members.empty()) continue;
      Graph sub = make_edge_subgraph(g, members);
      for (EdgeId e = 0; e < sub.edge_slots(); ++e)
        CHECK(support_tau(sub, e, tau) >= k - 2);
    }
  }
}

TEST_CASE("phi independent of input edge order") {
  auto pairs = hotruss::generate_uniform_random(18, 45, 97);
  Graph base = Graph::from_edges(pairs);
  auto [base_res, base_stats] = hot_decompose(base, 2);
  auto want = testutil::phi_by_labels(base, base_res);

  std::mt19937_64 rng(4);
  for (int perm = 0; perm < 3; ++perm) {
    auto shuffled = pairs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Graph g = Graph::from_edges(shuffled);
    auto [res, stats] = hot_decompose(g, 2);
    CHECK(testutil::phi_by_labels(g, res) == want);
  }
}

TEST_CASE("nesting of result levels") {
  auto g = testutil::random_graph(24, 60, 101);
  auto [res, stats] = hot_decompose(g, 2);
  for (int k = 2; k < res.k_max(); ++k) {
    auto lower = res.edges_with_phi_at_least(k);
    auto upper = res.edges_with_phi_at_least(k + 1);
    std::set<EdgeId> lower_set(lower.begin(), lower.end());
    for (EdgeId e : upper) CHECK(lower_set.count(e));
  }
  for (int p : res.phi) CHECK(p >= 2);
}
