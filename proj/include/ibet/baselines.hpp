#pragma once

#include <vector>

#include "ibet/apsp.hpp"
#include "ibet/counters.hpp"
#include "ibet/detail/queues.hpp"
#include "ibet/graph.hpp"
#include "ibet/ibet.hpp"

namespace ibet {

/// Augmented APSP plus every source's stored dependency row.
struct KdbState {
  ApspState apsp;
  /// Row-major n x n, dependencies[s * n + v] = delta_{s.}(v); diagonal unused.
  std::vector<double> dependencies;

  double dependency(NodeId s, NodeId v) const { return dependencies[std::size_t(s) * apsp.node_count() + v]; }
};

/// Builds the state and the matching static scores in one sweep.
KdbState init_kdb_state(const Graph& graph, Scores* scores = nullptr);

class KdbWorkspace {
 public:
  explicit KdbWorkspace(std::size_t node_count = 0) { ensure(node_count); }
  void ensure(std::size_t node_count);

 private:
  friend struct KdbSource;

  std::size_t n_ = 0;
  detail::EpochMarks processed_;
  detail::EpochMarks in_bucket_;
  std::vector<double> old_dist_;
  std::vector<std::vector<NodeId>> ascending_;
  std::vector<NodeId> processed_list_;
  std::vector<NodeId> old_predecessors_;
  detail::DescendingQueue descending_;
};

/// Per-source recomputation over the region below the new edge, then a
/// bucket-list sweep replacing stored dependencies. Unit-weight graphs only.
UpdateReport kdb_update(Graph& graph, KdbState& state, Scores& scores, const UpdateEvent& event, KdbWorkspace& ws);
UpdateReport kdb_update(Graph& graph, KdbState& state, Scores& scores, const UpdateEvent& event);

class KwccWorkspace {
 public:
  explicit KwccWorkspace(std::size_t node_count = 0) { ensure(node_count); }
  void ensure(std::size_t node_count);

 private:
  friend UpdateReport kwcc_update(Graph&, ApspState&, Scores&, const UpdateEvent&, KwccWorkspace&);

  std::size_t n_ = 0;
  IbetWorkspace sources_;
  detail::EpochMarks marks_;
  std::vector<NodeId> fifo_;
};

/// Affected sources (smaller side on undirected graphs, as for iBet), one
/// pruned BFS from v per source, then per-pair predecessor walks over old and
/// new shortest paths.
UpdateReport kwcc_update(Graph& graph, ApspState& apsp, Scores& scores, const UpdateEvent& event, KwccWorkspace& ws);
UpdateReport kwcc_update(Graph& graph, ApspState& apsp, Scores& scores, const UpdateEvent& event);

}  // namespace ibet
