#pragma once

#include <algorithm>
#include <vector>

#include "hotruss/graph.hpp"
#include "hotruss/stats.hpp"
#include "hotruss/support.hpp"

namespace hotruss {

/// Per-edge bounds on the higher-order truss number. lower is always
/// populated; upper only when the top-r path computed it.
struct BoundsTable {
  std::vector<int> lower;
  std::vector<int> upper;
};

/// |V(Omega(v))| for the vertex-centric ball of radius floor(tau/2):
/// 1 + d_{floor(tau/2)}(v). Only the vertex count matters for the bound.
inline int vertex_centric_size(const Graph& g, VertexId v, int tau) {
  int h = tau / 2;
  if (h == 0) return 1;
  BoundedBfs bfs;
  bfs.run(g, v, h);
  return static_cast<int>(bfs.visited().size());
}

/// |V(Omega(e))| for odd tau: |{u,v} ∪ N_h(u) ∪ N_h(v)| with h=floor(tau/2).
inline int edge_centric_size(const Graph& g, EdgeId e, int tau) {
  if (!g.edge_alive(e))
    throw std::invalid_argument("edge_centric_size: edge is not alive");
  int h = tau / 2;
  auto [u, v] = g.endpoints(e);
  if (h == 0) return 2;
  BoundedBfs bu, bv;
  bu.run(g, u, h);
  bv.run(g, v, h);
  int count = static_cast<int>(bu.visited().size());
  for (VertexId w : bv.visited())
    if (!bu.reached(w)) ++count;
  return count;
}

namespace detail {

/// Shared scratch for the whole-graph lower-bound pass.
class LowerBoundEngine {
 public:
  LowerBoundEngine(const Graph& g, int tau, RunStats* stats)
      : g_(g), tau_(tau), h_(tau / 2), stats_(stats) {
    ball_.assign(g.vertex_slots(), 1);
    if (h_ >= 1) {
      for (VertexId v = 0; v < g.vertex_slots(); ++v) {
        if (!g.vertex_alive(v)) continue;
        if (h_ == 1) {
          ball_[v] = 1 + static_cast<int>(g.degree(v));
        } else {
          bu_.run(g, v, h_);
          if (stats_) ++stats_->bfs_traversals;
          ball_[v] = static_cast<int>(bu_.visited().size());
        }
      }
    }
  }

  int bound(EdgeId e) {
    auto [u, v] = g_.endpoints(e);
    int best = 2;
    if (h_ == 0) return best;  // tau == 1
    bu_.run(g_, u, h_);
    bv_.run(g_, v, h_);
    if (stats_) stats_->bfs_traversals += 2;
    if (tau_ % 2 == 0) {
      best = std::max({best, ball_[u], ball_[v]});
    } else {
      // |V(Omega(e))| subsumes both vertex-centric endpoint balls.
      int count = static_cast<int>(bu_.visited().size());
      for (VertexId w : bv_.visited())
        if (!bu_.reached(w)) ++count;
      best = std::max(best, count);
    }
    for (VertexId w : bv_.visited()) {
      if (w == u || w == v || !bu_.reached(w)) continue;
      best = std::max(best, ball_[w]);  // w in Delta_h(e, g)
    }
    return best;
  }

 private:
  const Graph& g_;
  int tau_, h_;
  RunStats* stats_;
  std::vector<int> ball_;
  BoundedBfs bu_, bv_;
};

}  // namespace detail

/// Lower bound on phi_tau(e, g): the largest ball size among the edge's
/// endpoint balls (even tau) or its edge-centric ball (odd tau), and the
/// balls of all floor(tau/2)-hop common neighbors. For tau=1 this is 2.
inline int lower_bound(const Graph& g, EdgeId e, int tau) {
  if (!g.edge_alive(e))
    throw std::invalid_argument("lower_bound: edge is not alive");
  detail::LowerBoundEngine eng(g, tau, nullptr);
  return eng.bound(e);
}

inline std::vector<int> compute_all_lower_bounds(const Graph& g, int tau,
                                                 RunStats* stats = nullptr) {
  detail::LowerBoundEngine eng(g, tau, stats);
  std::vector<int> lb(g.edge_slots(), 0);
  for (EdgeId e = 0; e < g.edge_slots(); ++e)
    if (g.edge_alive(e)) lb[e] = eng.bound(e);
  return lb;
}

/// Upper bound on phi_tau(e, g) via binary search for the largest mid such
/// that a connected subgraph containing e, restricted to the subgraph induced
/// by {u,v} ∪ Delta_tau(e,g) and to edges whose support (in the full graph)
/// is at least mid-2, gathers at least mid vertices within tau hops of u or v.
inline int compute_ub(const Graph& g, EdgeId e, int tau,
                      const std::vector<int>& supports,
                      RunStats* stats = nullptr) {
  if (!g.edge_alive(e))
    throw std::invalid_argument("compute_ub: edge is not alive");
  auto [u, v] = g.endpoints(e);

  SupportEngine eng(g.vertex_slots());
  const auto& delta = eng.common_neighbors(g, e, tau, stats);

  // Induced-subgraph membership: traversal never leaves {u,v} ∪ Delta.
  std::vector<std::uint8_t> allowed(g.vertex_slots(), 0);
  allowed[u] = allowed[v] = 1;
  for (VertexId w : delta) allowed[w] = 1;

  int lo = 2, hi = static_cast<int>(delta.size()) + 2, best = 2;
  BoundedBfs bu, bv;
  while (lo <= hi) {
    int mid = lo + (hi - lo) / 2;
    bool feasible = false;
    if (supports[e] >= mid - 2) {  // e itself must belong to the subgraph
      auto edge_ok = [&](EdgeId id) { return supports[id] >= mid - 2; };
      auto vertex_ok = [&](VertexId w) { return allowed[w] != 0; };
      bu.run_filtered(g, u, tau, edge_ok, vertex_ok);
      bv.run_filtered(g, v, tau, edge_ok, vertex_ok);
      if (stats) stats->bfs_traversals += 2;
      int count = static_cast<int>(bu.visited().size());
      for (VertexId w : bv.visited())
        if (!bu.reached(w)) ++count;
      feasible = count >= mid;
    }
    if (feasible) {
      best = mid;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return best;
}

}  // namespace hotruss
