#pragma once

#include <cstdint>
#include <vector>

#include "ibet/graph.hpp"

namespace ibet {

/// Distances and shortest-path counts from one source. Predecessors are not
/// stored; callers recompute them from the tight-edge test when needed.
struct SsspResult {
  NodeId source = 0;
  std::vector<double> dist;
  std::vector<double> sigma;
  /// Reached nodes in nondecreasing distance order, source first.
  std::vector<NodeId> settle_order;
};

/// Wall-clock split of a static run into its SSSP and accumulation parts.
struct StaticPhaseTimes {
  std::int64_t sssp_ns = 0;
  std::int64_t accumulation_ns = 0;
};

/// Reusable buffers for repeated single-source runs on graphs of a fixed size.
class SsspRunner {
 public:
  explicit SsspRunner(std::size_t node_count);

  /// BFS for unit-weight graphs, Dijkstra otherwise.
  const SsspResult& run(const Graph& graph, NodeId source);

  /// One-side dependencies of the last run's source; delta[source] is left at
  /// the value the recurrence gives and is not part of any score.
  const std::vector<double>& accumulate(const Graph& graph);

  const SsspResult& result() const { return result_; }
  const std::vector<double>& dependencies() const { return delta_; }

 private:
  void run_bfs(const Graph& graph, NodeId source);
  void run_dijkstra(const Graph& graph, NodeId source);

  SsspResult result_;
  std::vector<double> delta_;
  std::vector<NodeId> queue_;
  std::vector<std::uint8_t> settled_;
};

SsspResult sssp_augmented(const Graph& graph, NodeId source);

std::vector<double> accumulate_dependencies(const Graph& graph, const SsspResult& sssp);

/// Static betweenness, summed over ordered pairs for directed and undirected graphs alike.
Scores brandes_betweenness(const Graph& graph, StaticPhaseTimes* times = nullptr);

}  // namespace ibet
