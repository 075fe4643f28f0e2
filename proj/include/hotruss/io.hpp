#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hotruss/graph.hpp"
#include "hotruss/result.hpp"
#include "hotruss/stats.hpp"

namespace hotruss {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadReport {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Edge-list text: one "u v" pair of integer labels per line, arbitrary
/// whitespace, '#' starts a comment line, blank lines ignored. Duplicate
/// edges are dropped silently, self-loops dropped with a count. Malformed
/// lines raise ParseError carrying the 1-based line number.
inline LoadReport load_edge_list(std::istream& in) {
  std::vector<std::pair<Label, Label>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    std::size_t first = sv.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || sv[first] == '#') continue;

    Label vals[2];
    std::size_t pos = first, count = 0;
    while (pos < sv.size()) {
      std::size_t end = sv.find_first_of(" \t\r", pos);
      if (end == std::string_view::npos) end = sv.size();
      std::string_view tok = sv.substr(pos, end - pos);
      if (!tok.empty()) {
        if (count >= 2)
          throw ParseError("line " + std::to_string(lineno) +
                           ": expected two labels, got more");
        Label v{};
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
          throw ParseError("line " + std::to_string(lineno) +
                           ": not an integer label: '" + std::string(tok) +
                           "'");
        vals[count++] = v;
      }
      pos = sv.find_first_not_of(" \t\r", end);
      if (pos == std::string_view::npos) break;
    }
    if (count == 0) continue;
    if (count != 2)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected two labels, got one");
    pairs.emplace_back(vals[0], vals[1]);
  }
  LoadReport rep;
  rep.graph = Graph::from_edges(pairs, &rep.self_loops_dropped,
                                &rep.duplicates_dropped);
  return rep;
}

inline void write_edge_list(std::ostream& out,
                            const std::vector<std::pair<Label, Label>>& pairs) {
  for (const auto& [a, b] : pairs) out << a << ' ' << b << '\n';
}

/// Per-edge output: "label_u<TAB>label_v<TAB>phi", lower label first, lines
/// sorted by (label_u, label_v). Edges without an assigned phi are skipped.
inline void write_phi(std::ostream& out, const Graph& g,
                      const TrussResult& res) {
  struct Row {
    Label a, b;
    int phi;
  };
  std::vector<Row> rows;
  rows.reserve(res.phi.size());
  for (EdgeId e = 0; e < res.phi.size(); ++e) {
    if (res.phi[e] == TrussResult::kUnset) continue;
    Label a = g.label(g.edge_u(e)), b = g.label(g.edge_v(e));
    if (a > b) std::swap(a, b);
    rows.push_back({a, b, res.phi[e]});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  for (const Row& r : rows) out << r.a << '\t' << r.b << '\t' << r.phi << '\n';
}

/// Flat key<TAB>value stats document. Wall time is the caller's business and
/// goes last so deterministic comparisons can strip it.
inline void write_stats(std::ostream& out, const RunStats& s,
                        const std::vector<std::pair<std::string, std::string>>&
                            extra_front = {},
                        const std::vector<std::pair<std::string, std::string>>&
                            extra_back = {}) {
  for (const auto& [k, v] : extra_front) out << k << '\t' << v << '\n';
  out << "support_recomputations\t" << s.support_recomputations << '\n';
  out << "bfs_traversals\t" << s.bfs_traversals << '\n';
  out << "edges_peeled\t" << s.edges_peeled << '\n';
  out << "vertices_pruned\t" << s.vertices_pruned << '\n';
  out << "delayed_update_skips\t" << s.delayed_update_skips << '\n';
  out << "early_prune_skips\t" << s.early_prune_skips << '\n';
  out << "distance_skips\t" << s.distance_skips << '\n';
  out << "self_check_recomputations\t" << s.self_check_recomputations << '\n';
  out << "self_check_failures\t" << s.self_check_failures << '\n';
  for (const auto& [k, cnt] : s.per_k_iterations)
    out << "edges_at_k_" << k << '\t' << cnt << '\n';
  for (const auto& [k, v] : extra_back) out << k << '\t' << v << '\n';
}

}  // namespace hotruss
