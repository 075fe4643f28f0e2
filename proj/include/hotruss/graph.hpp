#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hotruss {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Label = std::int64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct HalfEdge {
  VertexId to;
  EdgeId id;
};

/// Undirected simple graph with dense internal vertex ids (assigned in
/// first-seen order of the input labels) and tombstone deletion. Removing an
/// edge or vertex flips an alive flag; adjacency vectors are never compacted,
/// so iteration must skip dead entries. Safe for concurrent read-only
/// traversal; mutation requires exclusive access.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labelled endpoint pairs. Self-loops and duplicate
  /// edges are dropped (their labels still register vertices). Counts of
  /// dropped lines are reported via the optional out-parameters.
  static Graph from_edges(const std::vector<std::pair<Label, Label>>& pairs,
                          std::size_t* self_loops_dropped = nullptr,
                          std::size_t* duplicates_dropped = nullptr) {
    Graph g;
    std::size_t loops = 0, dups = 0;
    std::unordered_map<std::uint64_t, bool> seen;
    seen.reserve(pairs.size() * 2);
    for (const auto& [la, lb] : pairs) {
      VertexId a = g.intern(la);
      VertexId b = g.intern(lb);
      if (a == b) {
        ++loops;
        continue;
      }
      VertexId lo = a < b ? a : b;
      VertexId hi = a < b ? b : a;
      std::uint64_t key = (std::uint64_t(lo) << 32) | hi;
      if (!seen.emplace(key, true).second) {
        ++dups;
        continue;
      }
      EdgeId e = static_cast<EdgeId>(g.ends_.size());
      g.ends_.emplace_back(lo, hi);
      g.edge_alive_.push_back(1);
      g.adj_[a].push_back({b, e});
      g.adj_[b].push_back({a, e});
      ++g.alive_degree_[a];
      ++g.alive_degree_[b];
      ++g.alive_edges_;
    }
    if (self_loops_dropped) *self_loops_dropped = loops;
    if (duplicates_dropped) *duplicates_dropped = dups;
    return g;
  }

  // Slot counts include tombstoned entries; ids range over [0, *_slots()).
  std::size_t vertex_slots() const { return adj_.size(); }
  std::size_t edge_slots() const { return ends_.size(); }

  std::size_t vertex_count() const { return alive_vertices_; }
  std::size_t edge_count() const { return alive_edges_; }

  bool vertex_alive(VertexId v) const { return vertex_alive_[v] != 0; }
  bool edge_alive(EdgeId e) const { return edge_alive_[e] != 0; }

  VertexId edge_u(EdgeId e) const { return ends_[e].first; }
  VertexId edge_v(EdgeId e) const { return ends_[e].second; }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return ends_[e]; }

  /// All half-edges ever attached to v, including dead ones. Callers filter
  /// with edge_alive().
  std::span<const HalfEdge> neighbors(VertexId v) const {
    return {adj_[v].data(), adj_[v].size()};
  }

  /// Number of alive incident edges. O(1).
  std::size_t degree(VertexId v) const { return alive_degree_[v]; }

  Label label(VertexId v) const { return labels_[v]; }

  std::optional<VertexId> find_vertex(Label l) const {
    auto it = label_to_id_.find(l);
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const {
    const auto& scan = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    VertexId other = adj_[a].size() <= adj_[b].size() ? b : a;
    for (const auto& h : scan) {
      if (h.to == other && edge_alive_[h.id]) return h.id;
    }
    return std::nullopt;
  }

  void remove_edge(EdgeId e) {
    if (!edge_alive_[e])
      throw std::logic_error("remove_edge: edge " + std::to_string(e) +
                             " already removed");
    edge_alive_[e] = 0;
    --alive_degree_[ends_[e].first];
    --alive_degree_[ends_[e].second];
    --alive_edges_;
  }

  /// Kills v and every alive edge incident to it.
  void remove_vertex(VertexId v) {
    if (!vertex_alive_[v])
      throw std::logic_error("remove_vertex: vertex " + std::to_string(v) +
                             " already removed");
    for (const auto& h : adj_[v]) {
      if (edge_alive_[h.id]) remove_edge(h.id);
    }
    vertex_alive_[v] = 0;
    --alive_vertices_;
  }

 private:
  VertexId intern(Label l) {
    auto [it, inserted] =
        label_to_id_.emplace(l, static_cast<VertexId>(adj_.size()));
    if (inserted) {
      adj_.emplace_back();
      labels_.push_back(l);
      vertex_alive_.push_back(1);
      alive_degree_.push_back(0);
      ++alive_vertices_;
    }
    return it->second;
  }

  std::vector<std::vector<HalfEdge>> adj_;
  std::vector<std::pair<VertexId, VertexId>> ends_;  // canonical (min,max)
  std::vector<Label> labels_;
  std::unordered_map<Label, VertexId> label_to_id_;
  std::vector<std::uint8_t> vertex_alive_;
  std::vector<std::uint8_t> edge_alive_;
  std::vector<std::uint32_t> alive_degree_;
  std::size_t alive_vertices_ = 0;
  std::size_t alive_edges_ = 0;
};

/// Truncated shortest-path distances from one source. Vertices farther than
/// the horizon are absent; the source maps to 0.
struct DistanceMap {
  VertexId source = kNoVertex;
  int horizon = 0;
  std::unordered_map<VertexId, int> dist;

  bool contains(VertexId v) const { return dist.count(v) != 0; }
  int at(VertexId v) const { return dist.at(v); }
  std::size_t size() const { return dist.size(); }
};

/// Reusable bounded-BFS scratch. One traversal costs O(ball size); resetting
/// between runs is an epoch bump, not a clear. Not thread-safe; use one
/// instance per thread.
class BoundedBfs {
 public:
  static constexpr int kUnreached = -1;

  void resize(std::size_t n) {
    if (stamp_.size() < n) {
      stamp_.resize(n, 0);
      dist_.resize(n, 0);
    }
  }

  /// Truncated BFS over alive edges only. visited() afterwards lists reached
  /// vertices in BFS order, source first.
  void run(const Graph& g, VertexId source, int horizon) {
    run_filtered(
        g, source, horizon, [](EdgeId) { return true; },
        [](VertexId) { return true; });
  }

  /// As run(), but traverses only alive edges passing edge_ok and visits only
  /// vertices passing vertex_ok (the source is always visited).
  template <class EdgeOk, class VertexOk>
  void run_filtered(const Graph& g, VertexId source, int horizon,
                    EdgeOk edge_ok, VertexOk vertex_ok) {
    if (!g.vertex_alive(source))
      throw std::invalid_argument("bounded_bfs: source vertex is not alive");
    if (horizon < 0)
      throw std::invalid_argument("bounded_bfs: negative horizon");
    resize(g.vertex_slots());
    if (++epoch_ == 0) {  // stamp wrap: invalidate everything once
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    order_.clear();
    stamp_[source] = epoch_;
    dist_[source] = 0;
    order_.push_back(source);
    std::size_t head = 0;
    while (head < order_.size()) {
      VertexId u = order_[head++];
      int du = dist_[u];
      if (du == horizon) break;  // BFS order: all remaining are at horizon
      for (const auto& h : g.neighbors(u)) {
        if (!g.edge_alive(h.id)) continue;
        if (stamp_[h.to] == epoch_) continue;
        if (!edge_ok(h.id) || !vertex_ok(h.to)) continue;
        stamp_[h.to] = epoch_;
        dist_[h.to] = du + 1;
        order_.push_back(h.to);
      }
    }
  }

  std::span<const VertexId> visited() const {
    return {order_.data(), order_.size()};
  }
  bool reached(VertexId v) const { return stamp_[v] == epoch_; }
  int distance(VertexId v) const {
    return stamp_[v] == epoch_ ? dist_[v] : kUnreached;
  }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<int> dist_;
  std::vector<VertexId> order_;
  std::uint32_t epoch_ = 0;
};

/// Truncated distances from `source` out to `horizon` hops.
inline DistanceMap bounded_bfs(const Graph& g, VertexId source, int horizon) {
  BoundedBfs bfs;
  bfs.run(g, source, horizon);
  DistanceMap m;
  m.source = source;
  m.horizon = horizon;
  m.dist.reserve(bfs.visited().size());
  for (VertexId v : bfs.visited()) m.dist.emplace(v, bfs.distance(v));
  return m;
}

/// |N_tau(v, G)|, the tau-hop degree of v.
inline std::size_t degree_tau(const Graph& g, VertexId v, int tau) {
  BoundedBfs bfs;
  bfs.run(g, v, tau);
  return bfs.visited().size() - 1;  // exclude the source itself
}

/// New graph holding only the given edges of `g`. Labels are preserved;
/// internal ids are reassigned in first-seen order of the edge list.
inline Graph make_edge_subgraph(const Graph& g,
                                const std::vector<EdgeId>& edges) {
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(edges.size());
  for (EdgeId e : edges)
    pairs.emplace_back(g.label(g.edge_u(e)), g.label(g.edge_v(e)));
  return Graph::from_edges(pairs);
}

}  // namespace hotruss
