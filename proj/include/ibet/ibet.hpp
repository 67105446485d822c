#pragma once

#include <span>
#include <vector>

#include "ibet/apsp.hpp"
#include "ibet/counters.hpp"
#include "ibet/detail/queues.hpp"
#include "ibet/graph.hpp"

namespace ibet {

/// Scratch buffers reused across updates on graphs with a fixed node count.
/// Every flag array is epoch-stamped, so no per-update O(n) clearing.
class IbetWorkspace {
 public:
  explicit IbetWorkspace(std::size_t node_count = 0) { ensure(node_count); }
  void ensure(std::size_t node_count);

 private:
  friend std::vector<NodeId> find_affected_sources(const Graph&, const UpdateEvent&, const ApspState&,
                                                   IbetWorkspace&, OpCounters*);
  friend AffectedDelta apsp_update(const Graph&, const UpdateEvent&, const ApspState&, IbetWorkspace&,
                                   OpCounters*, bool);
  friend struct AffectedSources select_affected_sources(const Graph&, const UpdateEvent&, const ApspState&,
                                                        IbetWorkspace&, OpCounters*);
  friend struct DependencyPass;
  friend struct FusedDependencyPass;

  std::size_t n_ = 0;
  detail::EpochMarks visited_;
  detail::EpochMarks visited_other_;
  detail::EpochMarks in_targets_;
  detail::EpochMarks in_queue_;
  std::vector<std::uint32_t> slot_;
  std::vector<double> accum_;
  detail::DescendingQueue queue_;
  // Fused pass only.
  detail::EpochMarks moved_;
  detail::EpochMarks want_new_;
  std::vector<double> accum_new_;
  std::vector<double> old_dist_;
  std::vector<double> old_sigma_;
};

/// Per-source record of one dependency pass: every node extracted from the
/// queue, with its accumulated Delta (or Delta') at extraction time.
struct DependencyTrace {
  struct Pass {
    NodeId source;
    bool increase;
    std::vector<std::pair<NodeId, double>> extracted;
  };
  std::vector<Pass> passes;
};

/// S(v) = { s : d(s,v) >= d(s,u) + w' }, by a pruned BFS over in-arcs from u.
/// Empty when the guard w' <= d(u,v) fails.
std::vector<NodeId> find_affected_sources(const Graph& graph, const UpdateEvent& event, const ApspState& apsp,
                                          IbetWorkspace& ws, OpCounters* counters = nullptr);

struct AffectedSources {
  /// The event as given, or with u and v swapped.
  UpdateEvent event;
  /// S(event.v).
  std::vector<NodeId> sources;
};

/// On undirected graphs S(v) under (u, v) and S(u) under (v, u) are disjoint,
/// and either one with the factor-2 rule covers every affected pair. Both
/// pruned searches advance one arc at a time and the first to finish is
/// returned, so the other costs at most one step more. Directed graphs keep
/// the given orientation.
AffectedSources select_affected_sources(const Graph& graph, const UpdateEvent& event, const ApspState& apsp,
                                        IbetWorkspace& ws, OpCounters* counters = nullptr);

/// Stages the new (d, sigma) of every affected pair without touching `apsp`.
/// `graph` and `apsp` describe the graph before the update. With
/// `choose_side`, delta.event may be the event with its endpoints swapped.
AffectedDelta apsp_update(const Graph& graph, const UpdateEvent& event, const ApspState& apsp, IbetWorkspace& ws,
                          OpCounters* counters = nullptr, bool choose_side = true);

/// Staged pairs regrouped by source: pairs of delta.sources_of_v[i] are
/// pairs[begin[i] .. begin[i + 1]), i.e. the targets T(s).
struct PairsBySource {
  std::vector<std::size_t> begin;
  std::vector<StagedPair> pairs;

  std::span<const StagedPair> of(std::size_t i) const {
    return std::span(pairs).subspan(begin[i], begin[i + 1] - begin[i]);
  }
};
PairsBySource group_by_source(const AffectedDelta& delta, std::size_t node_count);

/// Removes Delta_s from the scores of nodes on old shortest paths from s to
/// its affected targets. Must run before the graph is mutated and the delta committed.
void dependency_decrease(const Graph& graph_before, NodeId source, std::span<const StagedPair> targets,
                         const ApspState& apsp_before, Scores& scores, IbetWorkspace& ws,
                         OpCounters* counters = nullptr, DependencyTrace* trace = nullptr);

/// Adds Delta'_s along new shortest paths. Runs after mutation and commit.
void dependency_increase(const Graph& graph_after, NodeId source, std::span<const StagedPair> targets,
                         const ApspState& apsp_after, Scores& scores, IbetWorkspace& ws,
                         OpCounters* counters = nullptr, DependencyTrace* trace = nullptr);

/// Both passes at once, after mutation and commit: a single max-first queue
/// holds old-role entries keyed by d and new-role entries keyed by d'. A node
/// whose distance from s did not change serves both roles in one extraction,
/// so its in-arcs are scanned once. Old values of the targets come from the
/// staged pairs; `old_weight` is the weight of (u, v) before the update
/// (infinity for an insertion). Same Delta and Delta' as the two passes.
void dependency_fused(const Graph& graph_after, const UpdateEvent& event, double old_weight, NodeId source,
                      std::span<const StagedPair> targets, const ApspState& apsp_after, Scores& scores,
                      IbetWorkspace& ws, OpCounters* counters = nullptr, DependencyTrace* trace = nullptr);

struct IbetObservers {
  AffectedDelta* delta = nullptr;
  DependencyTrace* trace = nullptr;
};

enum class DependencyMode {
  /// dependency_fused per affected source.
  Fused,
  /// dependency_decrease before the commit, dependency_increase after it.
  TwoPass,
};

struct IbetOptions {
  DependencyMode dependency = DependencyMode::Fused;
  /// Undirected graphs only: process the smaller side, see select_affected_sources.
  bool choose_side = true;
};

/// Full incremental update: stage, then the dependency update around
/// mutation + commit. `graph`, `apsp` and `scores` must describe the graph
/// before the event.
UpdateReport ibet_update(Graph& graph, ApspState& apsp, Scores& scores, const UpdateEvent& event, IbetWorkspace& ws,
                         IbetObservers observers = {}, IbetOptions options = {});

/// Same, with a workspace allocated for this call.
UpdateReport ibet_update(Graph& graph, ApspState& apsp, Scores& scores, const UpdateEvent& event,
                         IbetObservers observers = {}, IbetOptions options = {});

}  // namespace ibet
