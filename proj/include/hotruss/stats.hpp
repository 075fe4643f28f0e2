#pragma once

#include <cstdint>
#include <map>

namespace hotruss {

/// Instrumentation counters for one decomposition run. All counters are
/// monotone while a run is in progress. support_recomputations counts one
/// unit per support evaluation of a specific edge (two bounded BFS
/// traversals plus an intersection); neighborhood captures and degree checks
/// tick bfs_traversals only.
struct RunStats {
  std::uint64_t support_recomputations = 0;
  std::uint64_t bfs_traversals = 0;
  std::uint64_t edges_peeled = 0;
  std::uint64_t vertices_pruned = 0;

  // Skip counters for the three peeling optimizations.
  std::uint64_t delayed_update_skips = 0;
  std::uint64_t early_prune_skips = 0;
  std::uint64_t distance_skips = 0;

  // Self-check mode: every distance skip re-derives the support and compares.
  // These recomputations are tracked apart so they do not perturb the
  // parity counters above.
  std::uint64_t self_check_recomputations = 0;
  std::uint64_t self_check_failures = 0;

  // k -> number of edges assigned truss number k.
  std::map<int, std::uint64_t> per_k_iterations;
};

}  // namespace hotruss
