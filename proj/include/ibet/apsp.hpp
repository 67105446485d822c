#pragma once

#include <span>
#include <vector>

#include "ibet/graph.hpp"

namespace ibet {

/// Augmented all-pairs state: dense row-major distance and path-count matrices.
class ApspState {
 public:
  ApspState() = default;
  explicit ApspState(std::size_t node_count);

  std::size_t node_count() const { return n_; }

  double dist(NodeId s, NodeId t) const { return dist_[index(s, t)]; }
  double sigma(NodeId s, NodeId t) const { return sigma_[index(s, t)]; }
  void set(NodeId s, NodeId t, double dist, double sigma) {
    dist_[index(s, t)] = dist;
    sigma_[index(s, t)] = sigma;
  }

  std::span<const double> dist_row(NodeId s) const { return {dist_.data() + index(s, 0), n_}; }
  std::span<const double> sigma_row(NodeId s) const { return {sigma_.data() + index(s, 0), n_}; }
  std::span<double> dist_row(NodeId s) { return {dist_.data() + index(s, 0), n_}; }
  std::span<double> sigma_row(NodeId s) { return {sigma_.data() + index(s, 0), n_}; }

  friend bool operator==(const ApspState&, const ApspState&) = default;

 private:
  std::size_t index(NodeId s, NodeId t) const { return std::size_t(s) * n_ + t; }

  std::size_t n_ = 0;
  std::vector<double> dist_;
  std::vector<double> sigma_;
};

/// One pending (s, t) overwrite, with the values it replaces.
struct StagedPair {
  NodeId source;
  NodeId target;
  double dist;
  double sigma;
  double old_dist;
  double old_sigma;
};

/// Everything an incremental update has learned before touching the matrices.
/// Old values stay readable in ApspState until commit().
struct AffectedDelta {
  UpdateEvent event{};
  /// False when the update cannot change any shortest path.
  bool active = false;

  /// S(v), in discovery order.
  std::vector<NodeId> sources_of_v;
  /// T(u) in BFS discovery order; targets.front() == v when active.
  std::vector<NodeId> targets;
  /// predecessor[i] is p(targets[i]); p(v) == v.
  std::vector<NodeId> predecessor;
  /// Staged pairs grouped by target: S(targets[i]) is the source column of
  /// staged[target_begin[i] .. target_begin[i + 1]).
  std::vector<std::size_t> target_begin;
  std::vector<StagedPair> staged;

  std::span<const StagedPair> staged_for_target(std::size_t i) const {
    return std::span(staged).subspan(target_begin[i], target_begin[i + 1] - target_begin[i]);
  }
};

/// n single-source runs.
ApspState init_apsp(const Graph& graph);

/// init_apsp plus static scores in the same sweep; optionally also keeps every
/// source's dependency row (row-major n x n) for engines that store them.
struct StaticState {
  ApspState apsp;
  Scores scores;
  std::vector<double> dependencies;
};
StaticState init_static_state(const Graph& graph, bool keep_dependencies);

/// Writes every staged pair (and, for undirected graphs, its mirror).
/// Throws std::logic_error if a staged distance exceeds the stored one.
void commit(ApspState& state, const AffectedDelta& delta, bool undirected);

/// Bytes needed by `matrices` dense n x n double matrices.
std::size_t quadratic_bytes(std::size_t node_count, std::size_t matrices);

/// Memory cap from IBET_MEMORY_CAP_BYTES, or 4 GiB when unset.
std::size_t memory_cap_bytes();

/// Throws CapacityError when `matrices` n x n matrices exceed the cap.
void ensure_capacity(std::size_t node_count, std::size_t matrices);

}  // namespace ibet
