#pragma once

#include <cassert>
#include <deque>
#include <utility>
#include <vector>

#include "hotruss/graph.hpp"
#include "hotruss/result.hpp"
#include "hotruss/stats.hpp"
#include "hotruss/support.hpp"

namespace hotruss {

namespace detail {

/// Deterministic enumeration of alive edges whose endpoints both lie in the
/// marked vertex set. Vertices are visited in ascending id order; each edge
/// reported once via its lower endpoint.
class ScopeCollector {
 public:
  void resize(std::size_t n) {
    if (mark_.size() < n) mark_.resize(n, 0);
  }

  template <class VertexRange>
  const std::vector<EdgeId>& collect(const Graph& g, const VertexRange& verts) {
    resize(g.vertex_slots());
    scope_.assign(verts.begin(), verts.end());
    std::sort(scope_.begin(), scope_.end());
    for (VertexId s : scope_) mark_[s] = 1;
    edges_.clear();
    for (VertexId s : scope_) {
      for (const auto& h : g.neighbors(s)) {
        if (!g.edge_alive(h.id)) continue;
        if (h.to > s && mark_[h.to]) edges_.push_back(h.id);
      }
    }
    for (VertexId s : scope_) mark_[s] = 0;
    return edges_;
  }

 private:
  std::vector<std::uint8_t> mark_;
  std::vector<VertexId> scope_;
  std::vector<EdgeId> edges_;
};

}  // namespace detail

/// Bottom-up peeling decomposition. Computes every edge's support once, then
/// repeatedly takes k = (minimum support) + 2, peels all edges at or below
/// k-2 in FIFO order, and after each removal recomputes the support of every
/// surviving edge with both endpoints among the removed edge's endpoints and
/// its pre-removal tau-hop common neighbors, provided its stored support
/// still exceeds k-2. The graph is consumed.
inline std::pair<TrussResult, RunStats> hot_decompose(Graph g, int tau) {
  if (tau < 1) throw std::invalid_argument("hot_decompose: tau must be >= 1");
  TrussResult res;
  res.tau = tau;
  res.phi.assign(g.edge_slots(), TrussResult::kUnset);
  RunStats stats;
  if (g.edge_count() == 0) return {std::move(res), std::move(stats)};

  SupportState sup = compute_all_supports(g, tau, &stats);
  SupportEngine engine(g.vertex_slots());
  detail::ScopeCollector scope;
  std::deque<EdgeId> queue;
  std::vector<std::uint8_t> queued(g.edge_slots(), 0);
  std::vector<VertexId> scope_verts;

  while (g.edge_count() > 0) {
    auto k_opt = min_support_k(sup, g);
    assert(k_opt.has_value());
    int k = *k_opt;

    // Seed the stage queue from the bucket index.
    for (int b = sup.scan_floor; b <= k - 2; ++b) {
      if (static_cast<std::size_t>(b) >= sup.buckets.size()) break;
      for (EdgeId e : sup.buckets[b]) {
        if (!g.edge_alive(e) || sup.value[e] != b || queued[e]) continue;
        queue.push_back(e);
        queued[e] = 1;
      }
    }

    while (!queue.empty()) {
      EdgeId e = queue.front();
      queue.pop_front();
      if (!g.edge_alive(e)) continue;
      assert(sup.value[e] <= k - 2);
      res.phi[e] = k;
      res.order.push_back(e);
      ++stats.per_k_iterations[k];

      auto [u, v] = g.endpoints(e);
      const auto& delta = engine.common_neighbors(g, e, tau, &stats);
      scope_verts.assign(delta.begin(), delta.end());
      scope_verts.push_back(u);
      scope_verts.push_back(v);
      g.remove_edge(e);
      ++stats.edges_peeled;

      for (EdgeId other : scope.collect(g, scope_verts)) {
        if (sup.value[other] <= k - 2) continue;  // already queued this stage
        int s = engine.support(g, other, tau, &stats);
        sup.set(other, s);
        if (s <= k - 2 && !queued[other]) {
          queue.push_back(other);
          queued[other] = 1;
        }
      }
    }
  }
  return {std::move(res), std::move(stats)};
}

}  // namespace hotruss
