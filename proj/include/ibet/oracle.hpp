#pragma once

#include <set>
#include <utility>
#include <vector>

#include "ibet/graph.hpp"

namespace ibet::oracle {

/// Row-major n x n distance and path-count matrices from the cubic relaxation.
struct AllPairs {
  std::size_t n = 0;
  std::vector<double> dist;
  std::vector<double> sigma;

  double d(NodeId s, NodeId t) const { return dist[std::size_t(s) * n + t]; }
  double paths(NodeId s, NodeId t) const { return sigma[std::size_t(s) * n + t]; }
};

/// Floyd-Warshall distances; path counts from the penultimate-node recurrence.
AllPairs all_pairs(const Graph& graph);

/// c_B(v) summed over ordered pairs directly from the definition. Theta(n^3).
Scores betweenness(const Graph& graph);

using PairSet = std::set<std::pair<NodeId, NodeId>>;

/// Ordered pairs whose distance or path count differs between the two graphs.
PairSet affected_pairs(const Graph& before, const Graph& after);
PairSet affected_pairs(const AllPairs& before, const AllPairs& after);

}  // namespace ibet::oracle
