#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "hotruss/graph.hpp"
#include "hotruss/stats.hpp"

namespace hotruss {

/// Scratch-backed evaluator for tau-hop common neighborhoods and supports.
/// One instance per algorithm run; the two BFS scratches persist across
/// calls so a support evaluation allocates nothing.
class SupportEngine {
 public:
  explicit SupportEngine(std::size_t n_hint = 0) {
    bfs_u_.resize(n_hint);
    bfs_v_.resize(n_hint);
  }

  /// Delta_tau(e, g): tau-hop common neighbors of e's endpoints, endpoints
  /// excluded. Intersection is computed by marking N_tau(u) in the first
  /// scratch's stamp array and scanning N_tau(v).
  const std::vector<VertexId>& common_neighbors(const Graph& g, EdgeId e,
                                                int tau,
                                                RunStats* stats = nullptr) {
    if (!g.edge_alive(e))
      throw std::invalid_argument("common_neighbors: edge is not alive");
    auto [u, v] = g.endpoints(e);
    bfs_u_.run(g, u, tau);
    bfs_v_.run(g, v, tau);
    if (stats) stats->bfs_traversals += 2;
    delta_.clear();
    for (VertexId w : bfs_v_.visited()) {
      if (w == u || w == v) continue;
      if (bfs_u_.reached(w)) delta_.push_back(w);
    }
    return delta_;
  }

  /// sup_tau(e, g) = |Delta_tau(e, g)|. Counts one support recomputation.
  int support(const Graph& g, EdgeId e, int tau, RunStats* stats = nullptr) {
    const auto& d = common_neighbors(g, e, tau, stats);
    if (stats) ++stats->support_recomputations;
    return static_cast<int>(d.size());
  }

 private:
  BoundedBfs bfs_u_, bfs_v_;
  std::vector<VertexId> delta_;
};

inline std::vector<VertexId> common_neighbors_tau(const Graph& g, EdgeId e,
                                                  int tau) {
  SupportEngine eng(g.vertex_slots());
  return eng.common_neighbors(g, e, tau);
}

inline int support_tau(const Graph& g, EdgeId e, int tau) {
  SupportEngine eng(g.vertex_slots());
  return static_cast<int>(eng.common_neighbors(g, e, tau).size());
}

/// Per-edge support values plus a bucket index keyed by support value.
/// Buckets use lazy invalidation: an entry in buckets[s] is current only if
/// the edge is alive, computed, and its stored value is still s. scan_floor
/// is the monotone minimum pointer: during peeling the minimum alive support
/// never decreases between stages, so scans resume where they left off.
struct SupportState {
  static constexpr int kNotComputed = -1;

  std::vector<int> value;
  std::vector<std::uint8_t> stale;
  std::vector<std::uint8_t> frozen;  // top-r: support pinned at phi-2
  std::vector<std::vector<EdgeId>> buckets;
  int scan_floor = 0;

  explicit SupportState(std::size_t edge_slots = 0)
      : value(edge_slots, kNotComputed),
        stale(edge_slots, 0),
        frozen(edge_slots, 0) {}

  bool computed(EdgeId e) const { return value[e] != kNotComputed; }

  void set(EdgeId e, int s) {
    assert(s >= 0);
    value[e] = s;
    stale[e] = 0;
    if (static_cast<std::size_t>(s) >= buckets.size()) buckets.resize(s + 1);
    buckets[s].push_back(e);
  }
};

/// Exact supports for every alive edge of g; buckets populated, nothing
/// stale. The per-edge counter ticks once per edge.
inline SupportState compute_all_supports(const Graph& g, int tau,
                                         RunStats* stats = nullptr) {
  SupportState st(g.edge_slots());
  SupportEngine eng(g.vertex_slots());
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    st.set(e, eng.support(g, e, tau, stats));
  }
  return st;
}

/// min over alive, non-stale edges of sup + 2, scanning buckets upward from
/// the monotone floor. Empty graph (no alive edge with a computed support)
/// signals completion via nullopt.
inline std::optional<int> min_support_k(SupportState& st, const Graph& g) {
  for (std::size_t b = st.scan_floor; b < st.buckets.size(); ++b) {
    for (EdgeId e : st.buckets[b]) {
      if (!g.edge_alive(e) || st.stale[e]) continue;
      if (st.value[e] != static_cast<int>(b)) continue;  // moved down
      st.scan_floor = static_cast<int>(b);
      return static_cast<int>(b) + 2;
    }
  }
  return std::nullopt;
}

}  // namespace hotruss
