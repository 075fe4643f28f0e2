#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "hotruss/graph.hpp"

namespace hotruss {

/// m distinct non-loop edges drawn uniformly from all vertex pairs over
/// labels 0..n-1. Deterministic for a fixed seed. Rejection sampling for
/// sparse requests, shuffle of the full pair list for dense ones.
inline std::vector<std::pair<Label, Label>> generate_uniform_random(
    std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 && m > 0)
    throw std::invalid_argument("generate: need at least 2 vertices");
  std::size_t max_edges = n * (n - 1) / 2;
  if (m > max_edges)
    throw std::invalid_argument("generate: m exceeds n*(n-1)/2");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Label, Label>> edges;
  edges.reserve(m);
  if (m * 2 > max_edges) {
    std::vector<std::pair<Label, Label>> all;
    all.reserve(max_edges);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        all.emplace_back(static_cast<Label>(a), static_cast<Label>(b));
    std::shuffle(all.begin(), all.end(), rng);
    edges.assign(all.begin(), all.begin() + m);
  } else {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    while (edges.size() < m) {
      std::uint64_t a = pick(rng), b = pick(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (!seen.insert((a << 32) | b).second) continue;
      edges.emplace_back(static_cast<Label>(a), static_cast<Label>(b));
    }
  }
  return edges;
}

/// Preferential-attachment growth: each new vertex attaches c = max(1,
/// round(m/n)) edges to existing vertices with probability proportional to
/// degree, yielding a heavy-tailed degree distribution. Final edge count is
/// approximately the requested m. Deterministic for a fixed seed.
inline std::vector<std::pair<Label, Label>> generate_preferential_attachment(
    std::size_t n, std::size_t m_target, std::uint64_t seed) {
  if (n < 2)
    throw std::invalid_argument("generate: need at least 2 vertices");
  std::size_t c = std::max<std::size_t>(1, (m_target + n / 2) / n);
  if (c >= n)
    throw std::invalid_argument("generate: m too large for attachment model");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Label, Label>> edges;
  edges.reserve(m_target + c);
  // Repeated-endpoint list: sampling an index uniformly is degree-biased.
  std::vector<std::uint32_t> endpoint_pool;
  std::size_t seed_clique = c + 1;
  for (std::size_t a = 0; a < seed_clique; ++a)
    for (std::size_t b = a + 1; b < seed_clique; ++b) {
      edges.emplace_back(static_cast<Label>(a), static_cast<Label>(b));
      endpoint_pool.push_back(static_cast<std::uint32_t>(a));
      endpoint_pool.push_back(static_cast<std::uint32_t>(b));
    }
  std::vector<std::uint32_t> targets;
  for (std::size_t v = seed_clique; v < n; ++v) {
    targets.clear();
    while (targets.size() < c) {
      std::uniform_int_distribution<std::size_t> pick(0,
                                                      endpoint_pool.size() - 1);
      std::uint32_t t = endpoint_pool[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    }
    for (std::uint32_t t : targets) {
      edges.emplace_back(static_cast<Label>(v), static_cast<Label>(t));
      endpoint_pool.push_back(static_cast<std::uint32_t>(v));
      endpoint_pool.push_back(t);
    }
  }
  return edges;
}

}  // namespace hotruss
