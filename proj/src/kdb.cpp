#include <chrono>
#include <cmath>

#include "ibet/baselines.hpp"

namespace ibet {

namespace {
using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count();
}
}  // namespace

KdbState init_kdb_state(const Graph& graph, Scores* scores) {
  auto snapshot = init_static_state(graph, true);
  if (scores) *scores = std::move(snapshot.scores);
  return {std::move(snapshot.apsp), std::move(snapshot.dependencies)};
}

void KdbWorkspace::ensure(std::size_t node_count) {
  if (node_count == n_) return;
  n_ = node_count;
  processed_.resize(n_);
  in_bucket_.resize(n_);
  old_dist_.assign(n_, 0.0);
  ascending_.assign(n_ + 1, {});
}

/// Work for one source s whose SSSP DAG gains the arc a -> b.
struct KdbSource {
  const Graph& graph;
  KdbWorkspace& ws;
  Scores& scores;
  NodeId s;
  std::span<double> dist;
  std::span<double> sigma;
  std::span<double> dep;
  OpCounters& apsp_counters;
  OpCounters& dep_counters;

  double old_dist(NodeId z) const { return ws.processed_.test(z) ? ws.old_dist_[z] : dist[z]; }

  /// Recomputes d' and sigma' for the region reached from b, level by level
  /// in new distance. Candidates are out-neighbours y of a processed x with
  /// d(s,y) > d'(s,x); old predecessors of nodes that moved closer are
  /// collected for the dependency sweep instead of being expanded.
  std::size_t update_paths(NodeId b, double start_level) {
    ws.processed_.next();
    ws.processed_list_.clear();
    ws.old_predecessors_.clear();
    auto& buckets = ws.ascending_;
    std::size_t pending = 1;
    auto level = static_cast<std::size_t>(start_level);
    buckets[level].push_back(b);
    IBET_COUNT(++apsp_counters.pq_inserts);

    for (; pending > 0; ++level) {
      auto& bucket = buckets[level];
      for (std::size_t i = 0; i < bucket.size(); ++i) {
        const NodeId y = bucket[i];
        --pending;
        IBET_COUNT(++apsp_counters.pq_extracts);
        if (ws.processed_.test(y)) continue;
        IBET_COUNT(++apsp_counters.nodes_visited);
        const double before = dist[y];
        double best = kInfinity, count = 0.0;
        for (const auto& arc : graph.in(y)) {
          IBET_COUNT(++apsp_counters.edges_scanned);
          const double via = dist[arc.node] + 1.0;
          if (via < best) {
            best = via;
            count = sigma[arc.node];
          } else if (via == best) {
            count += sigma[arc.node];
          }
        }
        if (best != double(level)) throw std::logic_error("KDB: node settled out of level order");
        // Old predecessors lose y as a successor when y moves closer.
        if (best < before && !std::isinf(before))
          for (const auto& arc : graph.in(y))
            if (arc.node != s && old_dist(arc.node) + 1.0 == before) ws.old_predecessors_.push_back(arc.node);
        ws.old_dist_[y] = before;
        ws.processed_.set(y);
        ws.processed_list_.push_back(y);
        dist[y] = best;
        sigma[y] = count;

        for (const auto& arc : graph.out(y)) {
          IBET_COUNT(++apsp_counters.edges_scanned);
          const NodeId x = arc.node;
          if (ws.processed_.test(x) || dist[x] <= best) continue;
          buckets[level + 1].push_back(x);
          ++pending;
          IBET_COUNT(++apsp_counters.pq_inserts);
        }
      }
      bucket.clear();
    }
    return ws.processed_list_.size();
  }

  /// Replaces stored dependencies of every node whose dependency may have
  /// changed, deepest first, and moves the difference into the scores.
  void update_dependencies() {
    auto& queue = ws.descending_;
    queue.reset(true, graph.node_count());
    ws.in_bucket_.next();
    auto enqueue = [&](NodeId node) {
      if (node == s || !ws.in_bucket_.insert(node)) return;
      queue.push(node, dist[node]);
      IBET_COUNT(++dep_counters.pq_inserts);
    };
    for (NodeId node : ws.processed_list_) enqueue(node);
    for (NodeId node : ws.old_predecessors_) enqueue(node);

    while (!queue.empty()) {
      const NodeId x = queue.pop();
      IBET_COUNT(++dep_counters.pq_extracts; ++dep_counters.nodes_visited);
      const double level = dist[x];
      double sum = 0.0;
      for (const auto& arc : graph.out(x)) {
        IBET_COUNT(++dep_counters.edges_scanned);
        const NodeId w = arc.node;
        if (dist[w] == level + 1.0) sum += (1.0 + dep[w]) / sigma[w];
      }
      const double updated = sigma[x] * sum;
      scores[x] += updated - dep[x];
      dep[x] = updated;
      for (const auto& arc : graph.in(x)) {
        IBET_COUNT(++dep_counters.edges_scanned);
        if (dist[arc.node] + 1.0 == level) enqueue(arc.node);
      }
    }
  }
};

UpdateReport kdb_update(Graph& graph, KdbState& state, Scores& scores, const UpdateEvent& event, KdbWorkspace& ws) {
  if (graph.weighted()) throw UnsupportedError("KDB handles unit-weight graphs only");
  const auto t0 = Clock::now();
  UpdateReport report;
  report.outcome = graph.apply_update(event);
  if (report.outcome == UpdateOutcome::NoOp) {
    report.total_ns = elapsed_ns(t0, Clock::now());
    return report;
  }
  const std::size_t n = graph.node_count();
  ws.ensure(n);
  auto& apsp = state.apsp;
  const NodeId u = event.u, v = event.v;

  for (NodeId s = 0; s < n; ++s) {
    IBET_COUNT(++report.apsp.nodes_visited);
    auto dist = apsp.dist_row(s);
    NodeId a = u, b = v;
    if (!graph.directed() && dist[v] < dist[u]) std::swap(a, b);
    // Case (i): equidistant endpoints, or the arc cannot shorten or add paths.
    if (std::isinf(dist[a]) || dist[a] + 1.0 > dist[b]) continue;

    ++report.affected_sources;
    const auto ta = Clock::now();
    KdbSource work{graph,
                   ws,
                   scores,
                   s,
                   dist,
                   apsp.sigma_row(s),
                   std::span(state.dependencies).subspan(std::size_t(s) * n, n),
                   report.apsp,
                   report.dependency};
    report.staged_pairs += work.update_paths(b, dist[a] + 1.0);
    const auto tb = Clock::now();
    work.update_dependencies();
    const auto tc = Clock::now();
    report.apsp_ns += elapsed_ns(ta, tb);
    report.dependency_ns += elapsed_ns(tb, tc);
  }
  report.total_ns = elapsed_ns(t0, Clock::now());
  return report;
}

UpdateReport kdb_update(Graph& graph, KdbState& state, Scores& scores, const UpdateEvent& event) {
  KdbWorkspace ws(graph.node_count());
  return kdb_update(graph, state, scores, event, ws);
}

}  // namespace ibet
