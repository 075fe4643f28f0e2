#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "hotruss/bounds.hpp"
#include "hotruss/optimized.hpp"

namespace hotruss {

/// Result of the top-r extraction: the largest k with a non-empty
/// (k,tau)-truss, and for every attained k in (k_max - r, k_max] the edge set
/// {e : phi(e) >= k}. support_computed_edges records which edges received a
/// support computation during the windowed peels (instrumentation for the
/// work-bound property; the global bound-precomputation pass is not
/// included).
struct TopRResult {
  int tau = 0;
  int r = 0;
  int k_max = 0;
  std::map<int, std::vector<EdgeId>> trusses;
  RunStats stats;
  std::vector<EdgeId> support_computed_edges;
};

/// Top-r (k,tau)-trusses without a full decomposition. Edges are pre-filtered
/// by the binary-search upper bound; only the subgraph with bounds above the
/// current window is peeled. A candidate k_max that no edge attains is
/// lowered (to the best truss number obtained if any edge finished, else by
/// r) and the enlarged window is re-peeled; finished edges carry their truss
/// number over with their support pinned to phi-2.
///
/// Each peel starts one stage below the reported window. That flush stage
/// absorbs edges whose upper bound exceeds the window but whose true truss
/// number does not; labels assigned by it are provisional (except at stage 2,
/// where they are exact) and are never reported, frozen, or used to lower
/// k_max.
inline TopRResult hot_top_r(const Graph& g0, int tau, int r) {
  if (tau < 1) throw std::invalid_argument("hot_top_r: tau must be >= 1");
  if (r < 1) throw std::invalid_argument("hot_top_r: r must be >= 1");
  TopRResult out;
  out.tau = tau;
  out.r = r;
  if (g0.edge_count() == 0) return out;

  RunStats& stats = out.stats;
  std::vector<int> lb = compute_all_lower_bounds(g0, tau, &stats);
  SupportState sup0 = compute_all_supports(g0, tau, &stats);
  std::vector<int> ub(g0.edge_slots(), 0);
  int k_max = 2;
  for (EdgeId e = 0; e < g0.edge_slots(); ++e) {
    if (!g0.edge_alive(e)) continue;
    ub[e] = compute_ub(g0, e, tau, sup0.value, &stats);
    k_max = std::max(k_max, ub[e]);
  }

  std::vector<int> phi(g0.edge_slots(), TrussResult::kUnset);
  std::vector<std::uint8_t> trusted(g0.edge_slots(), 0);
  std::vector<std::uint8_t> sup_seen(g0.edge_slots(), 0);
  SupportEngine seed_engine(g0.vertex_slots());

  while (true) {
    int window_low = k_max - r;           // report levels in (window_low, k_max]
    int flush_k = std::max(2, window_low);  // peel starts here

    Graph work = g0;
    for (EdgeId e = 0; e < g0.edge_slots(); ++e)
      if (g0.edge_alive(e) && ub[e] <= window_low) work.remove_edge(e);

    TrussResult res;
    res.tau = tau;
    res.phi.assign(g0.edge_slots(), TrussResult::kUnset);
    std::vector<std::uint8_t> frozen(g0.edge_slots(), 0);
    SupportState sup(g0.edge_slots());
    for (EdgeId e = 0; e < g0.edge_slots(); ++e) {
      if (!work.edge_alive(e)) continue;
      if (trusted[e]) {
        frozen[e] = 1;
        res.phi[e] = phi[e];
        sup.set(e, phi[e] - 2);
      } else {
        sup.set(e, seed_engine.support(work, e, tau, &stats));
        if (!sup_seen[e]) {
          sup_seen[e] = 1;
          out.support_computed_edges.push_back(e);
        }
      }
    }

    PeelConfig cfg;
    cfg.start_k = flush_k;
    cfg.stop_k = k_max;
    cfg.frozen = &frozen;
    PeelEngine engine(work, tau, lb, sup, res, stats, cfg);
    engine.run();

    // Labels from the flush stage conflate everything at or below it, except
    // at stage 2 where the label is exact by definition.
    for (EdgeId e = 0; e < g0.edge_slots(); ++e) {
      if (frozen[e] || res.phi[e] == TrussResult::kUnset) continue;
      if (res.phi[e] > flush_k || res.phi[e] == 2) {
        phi[e] = res.phi[e];
        trusted[e] = 1;
      }
    }
    int best_obtained = 0;
    for (EdgeId e = 0; e < g0.edge_slots(); ++e)
      if (trusted[e]) best_obtained = std::max(best_obtained, phi[e]);

    bool attained = false;
    for (EdgeId e = 0; e < g0.edge_slots(); ++e)
      if (trusted[e] && phi[e] == k_max) attained = true;
    if (attained) break;

    k_max = best_obtained > 0 ? best_obtained : std::max(2, k_max - r);
  }

  out.k_max = k_max;
  for (int k = std::max(2, k_max - r + 1); k <= k_max; ++k) {
    bool level_attained = false;
    std::vector<EdgeId> members;
    for (EdgeId e = 0; e < g0.edge_slots(); ++e) {
      if (!trusted[e]) continue;
      if (phi[e] == k) level_attained = true;
      if (phi[e] >= k) members.push_back(e);
    }
    if (level_attained) out.trusses.emplace(k, std::move(members));
  }
  return out;
}

}  // namespace hotruss
