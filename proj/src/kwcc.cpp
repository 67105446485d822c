#include <chrono>

#include "ibet/baselines.hpp"

namespace ibet {

namespace {
using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count();
}
}  // namespace

void KwccWorkspace::ensure(std::size_t node_count) {
  if (node_count == n_) return;
  n_ = node_count;
  sources_.ensure(n_);
  marks_.resize(n_);
  fifo_.clear();
  fifo_.reserve(n_);
}

namespace {

/// Walks the shortest-path DAG from t back towards s, adding
/// sign * sigma_sy * sigma_yt / sigma_st to every interior node y once.
template <bool Unit>
void walk_pair(const Graph& graph, const ApspState& apsp, NodeId s, NodeId t, double sign, Scores& scores,
               detail::EpochMarks& marks, std::vector<NodeId>& fifo, OpCounters& counters) {
  const double* dist = apsp.dist_row(s).data();
  const double* sigma = apsp.sigma_row(s).data();
  const double share = sign / sigma[t];
  marks.next();
  fifo.clear();
  fifo.push_back(t);
  for (std::size_t head = 0; head < fifo.size(); ++head) {
    const NodeId x = fifo[head];
    IBET_COUNT(++counters.nodes_visited);
    if (x != t) scores[x] += share * sigma[x] * apsp.sigma(x, t);
    for (const auto& arc : graph.in(x)) {
      IBET_COUNT(++counters.edges_scanned);
      const NodeId y = arc.node;
      if constexpr (Unit) {
        if (dist[y] + 1.0 != dist[x] || y == s || marks.test(y)) continue;
      } else {
        if (y == s || std::isinf(dist[y]) || marks.test(y)) continue;
        if (!dist_equal(dist[y] + arc.weight, dist[x])) continue;
      }
      marks.set(y);
      fifo.push_back(y);
    }
  }
}

}  // namespace

UpdateReport kwcc_update(Graph& graph, ApspState& apsp, Scores& scores, const UpdateEvent& event, KwccWorkspace& ws) {
  const auto t0 = Clock::now();
  UpdateReport report;
  report.outcome = graph.classify(event);
  if (report.outcome == UpdateOutcome::NoOp) {
    report.total_ns = elapsed_ns(t0, Clock::now());
    return report;
  }
  ws.ensure(graph.node_count());

  AffectedDelta delta;
  auto selected = select_affected_sources(graph, event, apsp, ws.sources_, &report.apsp);
  delta.event = selected.event;
  delta.sources_of_v = std::move(selected.sources);
  report.affected_sources = delta.sources_of_v.size();
  const NodeId u = delta.event.u, v = delta.event.v;
  const double w = delta.event.new_weight;

  // One pruned BFS from v per affected source.
  auto& staged = delta.staged;
  for (NodeId s : delta.sources_of_v) {
    const auto dist = apsp.dist_row(s);
    const double dsu = dist[u];
    ws.marks_.next();
    ws.marks_.set(v);
    ws.fifo_.clear();
    ws.fifo_.push_back(v);
    for (std::size_t head = 0; head < ws.fifo_.size(); ++head) {
      const NodeId t = ws.fifo_[head];
      IBET_COUNT(++report.apsp.nodes_visited);
      const double via = dsu + w + apsp.dist(v, t);
      const double extra = apsp.sigma(s, u) * apsp.sigma(v, t);
      const double old_sigma = apsp.sigma(s, t);
      if (dist_less(via, dist[t]))
        staged.push_back({s, t, via, extra, dist[t], old_sigma});
      else
        staged.push_back({s, t, dist[t], old_sigma + extra, dist[t], old_sigma});
      for (const auto& arc : graph.out(t)) {
        IBET_COUNT(++report.apsp.edges_scanned);
        const NodeId x = arc.node;
        if (ws.marks_.test(x)) continue;
        if (!dist_less_equal(dsu + w + apsp.dist(v, x), dist[x])) continue;
        ws.marks_.set(x);
        ws.fifo_.push_back(x);
      }
    }
  }
  report.staged_pairs = staged.size();
  const auto t1 = Clock::now();

  const double factor = graph.directed() ? 1.0 : 2.0;
  const auto walk = graph.weighted() ? walk_pair<false> : walk_pair<true>;
  for (const auto& pair : staged)
    if (pair.old_sigma > 0.0)
      walk(graph, apsp, pair.source, pair.target, -factor, scores, ws.marks_, ws.fifo_, report.dependency);
  const auto t2 = Clock::now();

  graph.apply_update(event);
  commit(apsp, delta, !graph.directed());
  const auto t3 = Clock::now();

  for (const auto& pair : staged)
    walk(graph, apsp, pair.source, pair.target, factor, scores, ws.marks_, ws.fifo_, report.dependency);
  const auto t4 = Clock::now();

  report.apsp_ns = elapsed_ns(t0, t1) + elapsed_ns(t2, t3);
  report.dependency_ns = elapsed_ns(t1, t2) + elapsed_ns(t3, t4);
  report.total_ns = elapsed_ns(t0, t4);
  return report;
}

UpdateReport kwcc_update(Graph& graph, ApspState& apsp, Scores& scores, const UpdateEvent& event) {
  KwccWorkspace ws(graph.node_count());
  return kwcc_update(graph, apsp, scores, event, ws);
}

}  // namespace ibet
