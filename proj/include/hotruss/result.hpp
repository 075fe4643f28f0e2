#pragma once

#include <algorithm>
#include <vector>

#include "hotruss/graph.hpp"

namespace hotruss {

/// Per-edge higher-order truss numbers for one value of tau, plus the edge
/// removal order for determinism checks. phi is indexed by EdgeId of the
/// decomposed graph; kUnset marks edges never assigned (only possible while a
/// run is still in flight).
struct TrussResult {
  static constexpr int kUnset = -1;

  int tau = 0;
  std::vector<int> phi;
  std::vector<EdgeId> order;

  int k_max() const {
    int k = 0;
    for (int p : phi) k = std::max(k, p);
    return k;
  }

  /// The (k,tau)-truss as an edge set: every edge with phi >= k.
  std::vector<EdgeId> edges_with_phi_at_least(int k) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < phi.size(); ++e)
      if (phi[e] != kUnset && phi[e] >= k) out.push_back(e);
    return out;
  }
};

}  // namespace hotruss
