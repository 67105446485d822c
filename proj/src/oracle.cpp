#include "ibet/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace ibet::oracle {

AllPairs all_pairs(const Graph& graph) {
  const std::size_t n = graph.node_count();
  AllPairs ap;
  ap.n = n;
  ap.dist.assign(n * n, kInfinity);
  ap.sigma.assign(n * n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    ap.dist[s * n + s] = 0.0;
    for (const auto& arc : graph.out(NodeId(s)))
      ap.dist[s * n + arc.node] = std::min(ap.dist[s * n + arc.node], arc.weight);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = ap.dist[i * n + k];
      if (dik == kInfinity) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double through = dik + ap.dist[k * n + j];
        if (through < ap.dist[i * n + j]) ap.dist[i * n + j] = through;
      }
    }

  std::vector<NodeId> order(n);
  for (std::size_t s = 0; s < n; ++s) {
    const double* row = &ap.dist[s * n];
    double* count = &ap.sigma[s * n];
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return row[a] < row[b]; });
    count[s] = 1.0;
    for (NodeId t : order) {
      if (t == s || row[t] == kInfinity) continue;
      double total = 0.0;
      for (const auto& arc : graph.in(t))
        if (row[arc.node] != kInfinity && dist_equal(row[arc.node] + arc.weight, row[t])) total += count[arc.node];
      count[t] = total;
    }
  }
  return ap;
}

Scores betweenness(const Graph& graph) {
  const std::size_t n = graph.node_count();
  const AllPairs ap = all_pairs(graph);
  Scores scores(n, 0.0);
  for (NodeId s = 0; s < n; ++s)
    for (NodeId t = 0; t < n; ++t) {
      if (s == t || ap.paths(s, t) == 0.0) continue;
      const double dst = ap.d(s, t);
      for (NodeId v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        const double dsv = ap.d(s, v), dvt = ap.d(v, t);
        if (dsv == kInfinity || dvt == kInfinity) continue;
        if (dist_equal(dsv + dvt, dst)) scores[v] += ap.paths(s, v) * ap.paths(v, t) / ap.paths(s, t);
      }
    }
  return scores;
}

PairSet affected_pairs(const AllPairs& before, const AllPairs& after) {
  PairSet pairs;
  for (NodeId s = 0; s < before.n; ++s)
    for (NodeId t = 0; t < before.n; ++t) {
      if (s == t) continue;
      if (dist_less(after.d(s, t), before.d(s, t)) || after.paths(s, t) != before.paths(s, t))
        pairs.insert({s, t});
    }
  return pairs;
}

PairSet affected_pairs(const Graph& before, const Graph& after) {
  return affected_pairs(all_pairs(before), all_pairs(after));
}

}  // namespace ibet::oracle
