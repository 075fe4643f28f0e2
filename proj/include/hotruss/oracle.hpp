#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "hotruss/graph.hpp"
#include "hotruss/result.hpp"

namespace hotruss::oracle {

// Brute-force reference implementations for the test suite. Everything here
// recomputes from first principles on every call and shares no traversal or
// support code with the production algorithms. Only for small graphs.

/// Plain truncated BFS: vertex -> distance, over alive edges, source included.
inline std::map<VertexId, int> naive_distances(const Graph& g, VertexId src,
                                               int horizon) {
  std::map<VertexId, int> dist;
  dist[src] = 0;
  std::queue<VertexId> q;
  q.push(src);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    int dx = dist[x];
    if (dx >= horizon) continue;
    for (const auto& h : g.neighbors(x)) {
      if (!g.edge_alive(h.id)) continue;
      if (dist.count(h.to)) continue;
      dist[h.to] = dx + 1;
      q.push(h.to);
    }
  }
  return dist;
}

inline std::set<VertexId> naive_neighborhood(const Graph& g, VertexId v,
                                             int tau) {
  std::set<VertexId> out;
  for (const auto& [w, d] : naive_distances(g, v, tau))
    if (w != v) out.insert(w);
  return out;
}

inline int naive_support(const Graph& g, EdgeId e, int tau) {
  auto nu = naive_neighborhood(g, g.edge_u(e), tau);
  auto nv = naive_neighborhood(g, g.edge_v(e), tau);
  int count = 0;
  for (VertexId w : nu)
    if (nv.count(w)) ++count;
  return count;
}

/// The (k,tau)-truss by definition: delete every edge whose support within
/// the remaining subgraph falls below k-2, recomputing all supports from
/// scratch each round, until a fixpoint. Returns surviving edge ids.
inline std::vector<EdgeId> ktruss_naive(const Graph& g, int k, int tau) {
  if (k < 2) throw std::invalid_argument("ktruss_naive: k must be >= 2");
  Graph work = g;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<EdgeId> doomed;
    for (EdgeId e = 0; e < work.edge_slots(); ++e) {
      if (!work.edge_alive(e)) continue;
      if (naive_support(work, e, tau) < k - 2) doomed.push_back(e);
    }
    for (EdgeId e : doomed) {
      work.remove_edge(e);
      changed = true;
    }
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < work.edge_slots(); ++e)
    if (work.edge_alive(e)) out.push_back(e);
  return out;
}

/// phi by direct evaluation of the definition: for rising k, an edge's truss
/// number is the largest k whose (k,tau)-truss still contains it.
inline TrussResult decompose_naive(const Graph& g, int tau) {
  TrussResult res;
  res.tau = tau;
  res.phi.assign(g.edge_slots(), TrussResult::kUnset);
  for (EdgeId e = 0; e < g.edge_slots(); ++e)
    if (g.edge_alive(e)) res.phi[e] = 2;  // a lone edge is a (2,tau)-truss
  int k = 3;
  while (true) {
    auto surviving = ktruss_naive(g, k, tau);
    if (surviving.empty()) break;
    for (EdgeId e : surviving) res.phi[e] = k;
    ++k;
  }
  return res;
}

/// Classic triangle-based truss decomposition (direct common neighbors),
/// used to cross-check tau=1 runs. Recomputes triangle counts per round.
inline TrussResult classic_truss_decompose(const Graph& g) {
  Graph work = g;
  TrussResult res;
  res.tau = 1;
  res.phi.assign(g.edge_slots(), TrussResult::kUnset);

  auto triangle_support = [](const Graph& w, EdgeId e) {
    std::set<VertexId> nu, nv;
    for (const auto& h : w.neighbors(w.edge_u(e)))
      if (w.edge_alive(h.id)) nu.insert(h.to);
    for (const auto& h : w.neighbors(w.edge_v(e)))
      if (w.edge_alive(h.id)) nv.insert(h.to);
    int c = 0;
    for (VertexId x : nu)
      if (nv.count(x)) ++c;
    return c;
  };

  int k = 2;
  while (work.edge_count() > 0) {
    int min_sup = std::numeric_limits<int>::max();
    for (EdgeId e = 0; e < work.edge_slots(); ++e)
      if (work.edge_alive(e))
        min_sup = std::min(min_sup, triangle_support(work, e));
    k = std::max(k, min_sup + 2);
    bool removed = true;
    while (removed) {
      removed = false;
      for (EdgeId e = 0; e < work.edge_slots(); ++e) {
        if (!work.edge_alive(e)) continue;
        if (triangle_support(work, e) <= k - 2) {
          res.phi[e] = k;
          work.remove_edge(e);
          removed = true;
        }
      }
    }
  }
  return res;
}

struct CheckResult {
  bool ok = true;
  std::vector<VertexId> witnesses;  // violating vertices (internal ids of the
                                    // subgraph handed in)
};

/// Minimum-degree property of a (k,tau)-truss: every vertex of the truss
/// subgraph has tau-hop degree >= k-1 inside the subgraph.
inline CheckResult check_min_degree(const Graph& truss_sub, int tau, int k) {
  CheckResult r;
  for (VertexId v = 0; v < truss_sub.vertex_slots(); ++v) {
    if (!truss_sub.vertex_alive(v) || truss_sub.degree(v) == 0) continue;
    if (static_cast<int>(naive_neighborhood(truss_sub, v, tau).size()) <
        k - 1) {
      r.ok = false;
      r.witnesses.push_back(v);
    }
  }
  return r;
}

/// Bounded-diameter property: each connected component G'' of the truss
/// satisfies diameter(G'') * k <= 2 * tau * (|V(G'')| - 1). Exact all-pairs
/// BFS per component.
inline bool check_diameter(const Graph& truss_sub, int tau, int k) {
  std::vector<int> comp(truss_sub.vertex_slots(), -1);
  int ncomp = 0;
  for (VertexId v = 0; v < truss_sub.vertex_slots(); ++v) {
    if (!truss_sub.vertex_alive(v) || truss_sub.degree(v) == 0) continue;
    if (comp[v] != -1) continue;
    auto dist = naive_distances(truss_sub, v,
                                static_cast<int>(truss_sub.vertex_slots()));
    for (const auto& [w, d] : dist) comp[w] = ncomp;
    ++ncomp;
  }
  std::vector<long long> comp_size(ncomp, 0), comp_diam(ncomp, 0);
  for (VertexId v = 0; v < truss_sub.vertex_slots(); ++v) {
    if (comp[v] == -1) continue;
    ++comp_size[comp[v]];
    auto dist = naive_distances(truss_sub, v,
                                static_cast<int>(truss_sub.vertex_slots()));
    for (const auto& [w, d] : dist)
      comp_diam[comp[v]] = std::max<long long>(comp_diam[comp[v]], d);
  }
  for (int c = 0; c < ncomp; ++c) {
    if (comp_diam[c] * k > 2LL * tau * (comp_size[c] - 1)) return false;
  }
  return true;
}

/// Mean relative error of a per-edge bound against the exact truss numbers:
/// avg over edges of |phi - bound| / phi.
inline double approximation_error(const TrussResult& exact,
                                  const std::vector<int>& bound) {
  double sum = 0.0;
  std::size_t m = 0;
  for (EdgeId e = 0; e < exact.phi.size(); ++e) {
    if (exact.phi[e] == TrussResult::kUnset) continue;
    sum += std::abs(exact.phi[e] - bound[e]) / double(exact.phi[e]);
    ++m;
  }
  return m == 0 ? 0.0 : sum / double(m);
}

}  // namespace hotruss::oracle
