#pragma once

#include <cassert>
#include <deque>
#include <limits>
#include <utility>
#include <vector>

#include "hotruss/baseline.hpp"  // detail::ScopeCollector
#include "hotruss/bounds.hpp"
#include "hotruss/graph.hpp"
#include "hotruss/result.hpp"
#include "hotruss/stats.hpp"
#include "hotruss/support.hpp"

namespace hotruss {

/// Per-target flags: true iff the truncated distance from u or from v to the
/// target differs between the two graph states (unreachable-within-tau is a
/// distinct value that compares equal to itself).
inline std::vector<bool> distances_changed(const Graph& before,
                                           const Graph& after, VertexId u,
                                           VertexId v,
                                           const std::vector<VertexId>& targets,
                                           int tau) {
  BoundedBfs bu_pre, bv_pre, bu_post, bv_post;
  bu_pre.run(before, u, tau);
  bv_pre.run(before, v, tau);
  bool u_alive = after.vertex_alive(u), v_alive = after.vertex_alive(v);
  if (u_alive) bu_post.run(after, u, tau);
  if (v_alive) bv_post.run(after, v, tau);
  std::vector<bool> changed(targets.size(), false);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    VertexId w = targets[i];
    int du_post = u_alive ? bu_post.distance(w) : BoundedBfs::kUnreached;
    int dv_post = v_alive ? bv_post.distance(w) : BoundedBfs::kUnreached;
    changed[i] =
        bu_pre.distance(w) != du_post || bv_pre.distance(w) != dv_post;
  }
  return changed;
}

struct PeelConfig {
  int start_k = 2;
  int stop_k = std::numeric_limits<int>::max();  // inclusive
  bool self_check = false;
  // Top-r: edges whose phi is already known. Their phi is never overwritten,
  // their pinned support (phi-2) is never recomputed, and they are peeled
  // exactly once, at stage k = phi.
  const std::vector<std::uint8_t>* frozen = nullptr;
};

/// The optimized peeling state machine: walks k upward one stage at a time,
/// lazily computing supports when a stage reaches an edge's lower bound, and
/// guarding every post-removal support update with the three skip rules
/// (delayed update by lower bound, early pruning by tau-hop degree,
/// unchanged-distance detection). Mutates the graph it is given.
class PeelEngine {
 public:
  PeelEngine(Graph& g, int tau, const std::vector<int>& lb, SupportState& sup,
             TrussResult& res, RunStats& stats, PeelConfig cfg)
      : g_(g),
        tau_(tau),
        lb_(lb),
        sup_(sup),
        res_(res),
        stats_(stats),
        cfg_(cfg),
        engine_(g.vertex_slots()),
        queued_(g.edge_slots(), 0),
        in_worklist_(g.vertex_slots(), 0) {}

  void run() {
    for (int k = cfg_.start_k; g_.edge_count() > 0 && k <= cfg_.stop_k; ++k) {
      stage_refresh(k);
      seed_queue(k);
      process_stage(k);
      bucket_floor_ = k - 1;  // no alive exact support <= k-2 remains
    }
  }

  /// Lemma-6 cascade. If x's tau-hop degree is at most k-1, assigns phi = k
  /// to all its incident edges, removes it, re-tests the tau-hop degrees of
  /// its pre-removal tau-neighborhood (newly prunable vertices join the
  /// worklist), recomputes supports of surviving neighborhood-internal edges
  /// with lower bound <= k, and returns true. Otherwise changes nothing.
  bool prune_vertex(VertexId x, int k) {
    if (!g_.vertex_alive(x)) return false;
    deg_bfs_.run(g_, x, tau_);
    ++stats_.bfs_traversals;
    if (static_cast<int>(deg_bfs_.visited().size()) - 1 > k - 1) return false;

    std::deque<VertexId> worklist;
    std::vector<VertexId> marked;
    worklist.push_back(x);
    in_worklist_[x] = 1;
    marked.push_back(x);

    std::vector<VertexId> nbhd, survivors;
    while (!worklist.empty()) {
      VertexId u0 = worklist.front();
      worklist.pop_front();
      assert(g_.vertex_alive(u0));
      for (const auto& h : g_.neighbors(u0)) {
        if (!g_.edge_alive(h.id)) continue;
        assert(!frozen(h.id));  // a frozen edge outlives any prunable vertex
        assert(lb_[h.id] <= k);
        if (!frozen(h.id)) {
          res_.phi[h.id] = k;
          ++res_ref_count(k);
        }
        res_.order.push_back(h.id);
      }
      deg_bfs_.run(g_, u0, tau_);
      ++stats_.bfs_traversals;
      nbhd.assign(deg_bfs_.visited().begin() + 1, deg_bfs_.visited().end());
      stats_.edges_peeled += g_.degree(u0);
      g_.remove_vertex(u0);
      ++stats_.vertices_pruned;

      survivors.clear();
      for (VertexId w : nbhd) {
        if (!g_.vertex_alive(w) || in_worklist_[w]) continue;
        deg_bfs_.run(g_, w, tau_);
        ++stats_.bfs_traversals;
        if (static_cast<int>(deg_bfs_.visited().size()) - 1 <= k - 1) {
          worklist.push_back(w);
          in_worklist_[w] = 1;
          marked.push_back(w);
        } else {
          survivors.push_back(w);
        }
      }
      for (EdgeId e2 : scope_.collect(g_, survivors)) {
        if (frozen(e2)) continue;
        if (lb_[e2] > k) {
          if (sup_.computed(e2)) sup_.stale[e2] = 1;
          continue;
        }
        recompute_and_enqueue(e2, k);
      }
    }
    for (VertexId w : marked) in_worklist_[w] = 0;
    return true;
  }

 private:
  bool frozen(EdgeId e) const { return cfg_.frozen && (*cfg_.frozen)[e]; }

  std::uint64_t& res_ref_count(int k) { return stats_.per_k_iterations[k]; }

  // Supports are computed at the stage matching each edge's lower bound, and
  // stale values (possible only when supports were seeded up front, as in the
  // top-r path) are refreshed once their stage is reached.
  void stage_refresh(int k) {
    for (EdgeId e = 0; e < g_.edge_slots(); ++e) {
      if (!g_.edge_alive(e) || frozen(e)) continue;
      bool fresh_due = !sup_.computed(e) && lb_[e] == k;
      bool stale_due = sup_.computed(e) && sup_.stale[e] && lb_[e] <= k;
      if (!fresh_due && !stale_due) continue;
      int s = engine_.support(g_, e, tau_, &stats_);
      assert(s >= k - 2);
      sup_.set(e, s);
    }
  }

  void seed_queue(int k) {
    for (int b = bucket_floor_; b <= k - 2; ++b) {
      if (static_cast<std::size_t>(b) >= sup_.buckets.size()) break;
      for (EdgeId e : sup_.buckets[b]) {
        if (!g_.edge_alive(e) || sup_.stale[e] || queued_[e]) continue;
        if (sup_.value[e] != b) continue;
        queue_.push_back(e);
        queued_[e] = 1;
      }
    }
  }

  void process_stage(int k) {
    while (!queue_.empty()) {
      EdgeId e = queue_.front();
      queue_.pop_front();
      if (!g_.edge_alive(e)) continue;
      assert(sup_.value[e] <= k - 2);

      if (frozen(e)) {
        assert(res_.phi[e] != TrussResult::kUnset);
      } else {
        res_.phi[e] = k;
        ++res_ref_count(k);
      }
      res_.order.push_back(e);

      auto [u, v] = g_.endpoints(e);
      pre_u_.run(g_, u, tau_);
      pre_v_.run(g_, v, tau_);
      stats_.bfs_traversals += 2;
      delta_.clear();
      for (VertexId w : pre_v_.visited()) {
        if (w == u || w == v) continue;
        if (pre_u_.reached(w)) delta_.push_back(w);
      }
      g_.remove_edge(e);
      ++stats_.edges_peeled;

      scope_verts_.assign(delta_.begin(), delta_.end());
      scope_verts_.push_back(u);
      scope_verts_.push_back(v);
      const auto candidates = scope_.collect(g_, scope_verts_);

      std::size_t post_version = 0;  // 0: post-removal BFS not run yet
      for (EdgeId cand : candidates) {
        if (!g_.edge_alive(cand) || frozen(cand)) continue;

        if (lb_[cand] > k) {  // delayed update
          ++stats_.delayed_update_skips;
          if (sup_.computed(cand)) sup_.stale[cand] = 1;
          continue;
        }

        auto [a, b] = g_.endpoints(cand);
        if (prune_vertex(a, k) || prune_vertex(b, k)) {  // early pruning
          ++stats_.early_prune_skips;
          continue;
        }

        // Unchanged-support detection. The post maps must describe the
        // current graph: prune cascades above may have removed more edges,
        // so re-run them whenever the edge count moved.
        std::size_t version = g_.edge_count() + 1;
        if (post_version != version) {
          if (g_.vertex_alive(u)) post_u_.run(g_, u, tau_);
          if (g_.vertex_alive(v)) post_v_.run(g_, v, tau_);
          stats_.bfs_traversals += 2;
          post_version = version;
        }
        if (unchanged(u, v, a) && unchanged(u, v, b)) {
          ++stats_.distance_skips;
          if (cfg_.self_check) verify_unchanged(cand);
          continue;
        }

        if (sup_.value[cand] > k - 2) recompute_and_enqueue(cand, k);
      }
    }
  }

  bool unchanged(VertexId u, VertexId v, VertexId x) const {
    int du_post =
        g_.vertex_alive(u) ? post_u_.distance(x) : BoundedBfs::kUnreached;
    int dv_post =
        g_.vertex_alive(v) ? post_v_.distance(x) : BoundedBfs::kUnreached;
    return pre_u_.distance(x) == du_post && pre_v_.distance(x) == dv_post;
  }

  void verify_unchanged(EdgeId e) {
    ++stats_.self_check_recomputations;
    int fresh = check_engine_.support(g_, e, tau_, nullptr);
    if (fresh != sup_.value[e]) ++stats_.self_check_failures;
  }

  void recompute_and_enqueue(EdgeId e, int k) {
    int s = engine_.support(g_, e, tau_, &stats_);
    sup_.set(e, s);
    if (s <= k - 2 && !queued_[e]) {
      queue_.push_back(e);
      queued_[e] = 1;
    }
  }

  Graph& g_;
  int tau_;
  const std::vector<int>& lb_;
  SupportState& sup_;
  TrussResult& res_;
  RunStats& stats_;
  PeelConfig cfg_;

  SupportEngine engine_;
  SupportEngine check_engine_;  // self-check only; keeps counters clean
  detail::ScopeCollector scope_;
  BoundedBfs pre_u_, pre_v_, post_u_, post_v_, deg_bfs_;
  std::deque<EdgeId> queue_;
  std::vector<std::uint8_t> queued_;
  std::vector<std::uint8_t> in_worklist_;
  std::vector<VertexId> delta_, scope_verts_;
  int bucket_floor_ = 0;
};

/// Optimized bottom-up decomposition: identical phi output to hot_decompose,
/// with support recomputations reduced by the three skip rules. The graph is
/// consumed.
inline std::pair<TrussResult, RunStats> hot_decompose_plus(
    Graph g, int tau, bool self_check = false) {
  if (tau < 1)
    throw std::invalid_argument("hot_decompose_plus: tau must be >= 1");
  TrussResult res;
  res.tau = tau;
  res.phi.assign(g.edge_slots(), TrussResult::kUnset);
  RunStats stats;
  if (g.edge_count() == 0) return {std::move(res), std::move(stats)};

  std::vector<int> lb = compute_all_lower_bounds(g, tau, &stats);
  int start_k = std::numeric_limits<int>::max();
  for (EdgeId e = 0; e < g.edge_slots(); ++e)
    if (g.edge_alive(e)) start_k = std::min(start_k, lb[e]);

  SupportState sup(g.edge_slots());
  PeelConfig cfg;
  cfg.start_k = start_k;
  cfg.self_check = self_check;
  PeelEngine engine(g, tau, lb, sup, res, stats, cfg);
  engine.run();
  return {std::move(res), std::move(stats)};
}

}  // namespace hotruss
