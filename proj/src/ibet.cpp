#include "ibet/ibet.hpp"

#include <chrono>

namespace ibet {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count();
}

/// d(s,u) + w' + d(v,t) <= d(s,t), with unreachable d(s,u) never qualifying.
bool through_edge_qualifies(double via, double current) {
  return !std::isinf(via) && dist_less_equal(via, current);
}

}  // namespace

void IbetWorkspace::ensure(std::size_t node_count) {
  if (node_count == n_) return;
  n_ = node_count;
  visited_.resize(n_);
  visited_other_.resize(n_);
  in_targets_.resize(n_);
  in_queue_.resize(n_);
  slot_.assign(n_, 0);
  accum_.assign(n_, 0.0);
  moved_.resize(n_);
  want_new_.resize(n_);
  accum_new_.assign(n_, 0.0);
  old_dist_.assign(n_, 0.0);
  old_sigma_.assign(n_, 0.0);
}

std::vector<NodeId> find_affected_sources(const Graph& graph, const UpdateEvent& event, const ApspState& apsp,
                                          IbetWorkspace& ws, OpCounters* counters) {
  ws.ensure(graph.node_count());
  const NodeId u = event.u, v = event.v;
  const double w = event.new_weight;
  std::vector<NodeId> sources;
  if (!dist_less_equal(w, apsp.dist(u, v))) return sources;

  ws.visited_.next();
  ws.visited_.set(u);
  sources.push_back(u);
  for (std::size_t head = 0; head < sources.size(); ++head) {
    const NodeId y = sources[head];
    if (counters) IBET_COUNT(++counters->nodes_visited);
    for (const auto& arc : graph.in(y)) {
      if (counters) IBET_COUNT(++counters->edges_scanned);
      const NodeId x = arc.node;
      if (ws.visited_.test(x)) continue;
      if (through_edge_qualifies(apsp.dist(x, u) + w, apsp.dist(x, v))) {
        ws.visited_.set(x);
        sources.push_back(x);
      }
    }
  }
  return sources;
}

namespace {

/// Pruned BFS over in-arcs from u that can pause after any single arc.
class SourceSearch {
 public:
  SourceSearch(const UpdateEvent& event, detail::EpochMarks& marks) : event_(event), marks_(marks) {
    marks_.next();
    marks_.set(event.u);
    found_.push_back(event.u);
  }

  bool done() const { return head_ == found_.size(); }

  void step(const Graph& graph, const ApspState& apsp, OpCounters* counters) {
    const auto in = graph.in(found_[head_]);
    if (arc_ == 0 && counters) IBET_COUNT(++counters->nodes_visited);
    if (arc_ < in.size()) {
      if (counters) IBET_COUNT(++counters->edges_scanned);
      const NodeId x = in[arc_].node;
      if (!marks_.test(x) && through_edge_qualifies(apsp.dist(x, event_.u) + event_.new_weight,
                                                    apsp.dist(x, event_.v))) {
        marks_.set(x);
        found_.push_back(x);
      }
      ++arc_;
    }
    if (arc_ >= in.size()) {
      ++head_;
      arc_ = 0;
    }
  }

  const UpdateEvent& event() const { return event_; }
  std::vector<NodeId> take() { return std::move(found_); }

 private:
  UpdateEvent event_;
  detail::EpochMarks& marks_;
  std::vector<NodeId> found_;
  std::size_t head_ = 0;
  std::size_t arc_ = 0;
};

}  // namespace

AffectedSources select_affected_sources(const Graph& graph, const UpdateEvent& event, const ApspState& apsp,
                                        IbetWorkspace& ws, OpCounters* counters) {
  if (graph.directed()) return {event, find_affected_sources(graph, event, apsp, ws, counters)};
  ws.ensure(graph.node_count());
  if (!dist_less_equal(event.new_weight, apsp.dist(event.u, event.v))) return {event, {}};
  SourceSearch given(event, ws.visited_);
  SourceSearch swapped({event.v, event.u, event.new_weight}, ws.visited_other_);
  while (true) {
    if (given.done()) return {given.event(), given.take()};
    given.step(graph, apsp, counters);
    if (swapped.done()) return {swapped.event(), swapped.take()};
    swapped.step(graph, apsp, counters);
  }
}

AffectedDelta apsp_update(const Graph& graph, const UpdateEvent& given, const ApspState& apsp, IbetWorkspace& ws,
                          OpCounters* counters, bool choose_side) {
  AffectedDelta delta;
  if (choose_side) {
    auto selected = select_affected_sources(graph, given, apsp, ws, counters);
    delta.event = selected.event;
    delta.sources_of_v = std::move(selected.sources);
  } else {
    delta.event = given;
    delta.sources_of_v = find_affected_sources(graph, given, apsp, ws, counters);
  }
  if (delta.sources_of_v.empty()) return delta;
  delta.active = true;

  const NodeId u = delta.event.u, v = delta.event.v;
  const double w = delta.event.new_weight;
  auto& targets = delta.targets;
  auto& staged = delta.staged;

  ws.visited_.next();
  ws.visited_.set(v);
  ws.slot_[v] = 0;
  targets.push_back(v);
  delta.predecessor.push_back(v);

  for (std::size_t i = 0; i < targets.size(); ++i) {
    const NodeId t = targets[i];
    if (counters) IBET_COUNT(++counters->nodes_visited);
    delta.target_begin.push_back(staged.size());

    const double dvt = apsp.dist(v, t);
    const double svt = apsp.sigma(v, t);
    auto stage = [&](NodeId s) {
      if (counters) IBET_COUNT(++counters->source_list_scans);
      const double via = apsp.dist(s, u) + w + dvt;
      const double old = apsp.dist(s, t);
      if (!through_edge_qualifies(via, old)) return;
      const double extra = apsp.sigma(s, u) * svt;
      const double old_sigma = apsp.sigma(s, t);
      if (dist_less(via, old))
        staged.push_back({s, t, via, extra, old, old_sigma});
      else
        staged.push_back({s, t, old, old_sigma + extra, old, old_sigma});
    };
    if (i == 0) {
      for (NodeId s : delta.sources_of_v) stage(s);
    } else {
      // S(p(t)) is the source column of p(t)'s run. Index-based: staging appends.
      const std::size_t p = ws.slot_[delta.predecessor[i]];
      const std::size_t first = delta.target_begin[p];
      const std::size_t last = delta.target_begin[p + 1];
      for (std::size_t j = first; j < last; ++j) stage(staged[j].source);
    }

    for (const auto& arc : graph.out(t)) {
      if (counters) IBET_COUNT(++counters->edges_scanned);
      const NodeId x = arc.node;
      if (ws.visited_.test(x)) continue;
      const double dvx = apsp.dist(v, x);
      // Only follow edges of v's shortest-path DAG, so p(x) is a predecessor of x.
      if (!dist_equal(dvt + arc.weight, dvx)) continue;
      if (!dist_less_equal(w + dvx, apsp.dist(u, x))) continue;
      ws.visited_.set(x);
      ws.slot_[x] = static_cast<std::uint32_t>(targets.size());
      targets.push_back(x);
      delta.predecessor.push_back(t);
    }
  }
  delta.target_begin.push_back(staged.size());
  return delta;
}

PairsBySource group_by_source(const AffectedDelta& delta, std::size_t node_count) {
  PairsBySource grouped;
  const std::size_t k = delta.sources_of_v.size();
  std::vector<std::uint32_t> slot(node_count, 0);
  for (std::size_t i = 0; i < k; ++i) slot[delta.sources_of_v[i]] = static_cast<std::uint32_t>(i);
  grouped.begin.assign(k + 1, 0);
  for (const auto& pair : delta.staged) ++grouped.begin[slot[pair.source] + 1];
  for (std::size_t i = 0; i < k; ++i) grouped.begin[i + 1] += grouped.begin[i];
  grouped.pairs.resize(delta.staged.size());
  std::vector<std::size_t> cursor(grouped.begin.begin(), grouped.begin.end() - 1);
  for (const auto& pair : delta.staged) grouped.pairs[cursor[slot[pair.source]]++] = pair;
  return grouped;
}

struct DependencyPass {
  static void run(bool increase, const Graph& graph, NodeId s, std::span<const StagedPair> targets,
                  const ApspState& apsp, Scores& scores, IbetWorkspace& ws, OpCounters* counters,
                  DependencyTrace* trace) {
    if (graph.weighted())
      run_typed<false>(increase, graph, s, targets, apsp, scores, ws, counters, trace);
    else
      run_typed<true>(increase, graph, s, targets, apsp, scores, ws, counters, trace);
  }

  // Unit weights keep every distance an exact small integer, so tight-edge
  // tests compare exactly and unreachable predecessors fail them on their own.
  template <bool Unit>
  static void run_typed(bool increase, const Graph& graph, NodeId s, std::span<const StagedPair> targets,
                        const ApspState& apsp, Scores& scores, IbetWorkspace& ws, OpCounters* counters,
                        DependencyTrace* trace) {
    ws.ensure(graph.node_count());
    const double sign = (increase ? 1.0 : -1.0) * (graph.directed() ? 1.0 : 2.0);
    auto& accum = ws.accum_;
    auto& queue = ws.queue_;
    ws.in_targets_.next();
    ws.in_queue_.next();
    queue.reset(Unit, graph.node_count());
    DependencyTrace::Pass* record = nullptr;
    if (trace) record = &trace->passes.emplace_back(DependencyTrace::Pass{s, increase, {}});

    for (const auto& pair : targets) ws.in_targets_.set(pair.target);
    for (const auto& pair : targets) {
      // Targets unreachable before the update had no old paths to remove.
      const double key = increase ? pair.dist : apsp.dist(s, pair.target);
      if (std::isinf(key)) continue;
      ws.in_queue_.set(pair.target);
      accum[pair.target] = 0.0;
      queue.push(pair.target, key);
      if (counters) IBET_COUNT(++counters->pq_inserts);
    }

    const double* dist = apsp.dist_row(s).data();
    const double* sigma = apsp.sigma_row(s).data();
    while (!queue.empty()) {
      const NodeId w = queue.pop();
      if (counters) IBET_COUNT(++counters->pq_extracts; ++counters->nodes_visited);
      const double dw = accum[w];
      scores[w] += sign * dw;
      if (record) record->extracted.emplace_back(w, dw);

      const double carried = ws.in_targets_.test(w) ? 1.0 + dw : dw;
      const double ratio = carried / sigma[w];
      const double level = dist[w];
      const auto in = graph.in(w);
      if (counters) IBET_COUNT(counters->edges_scanned += in.size());
      for (const auto& arc : in) {
        const NodeId y = arc.node;
        if constexpr (Unit) {
          if (dist[y] + 1.0 != level || y == s) continue;
        } else {
          if (y == s || std::isinf(dist[y]) || !dist_equal(dist[y] + arc.weight, level)) continue;
        }
        if (ws.in_queue_.insert(y)) {
          accum[y] = 0.0;
          queue.push(y, dist[y]);
          if (counters) IBET_COUNT(++counters->pq_inserts);
        }
        accum[y] += sigma[y] * ratio;
      }
    }
  }
};

void dependency_decrease(const Graph& graph_before, NodeId source, std::span<const StagedPair> targets,
                         const ApspState& apsp_before, Scores& scores, IbetWorkspace& ws, OpCounters* counters,
                         DependencyTrace* trace) {
  DependencyPass::run(false, graph_before, source, targets, apsp_before, scores, ws, counters, trace);
}

void dependency_increase(const Graph& graph_after, NodeId source, std::span<const StagedPair> targets,
                         const ApspState& apsp_after, Scores& scores, IbetWorkspace& ws, OpCounters* counters,
                         DependencyTrace* trace) {
  DependencyPass::run(true, graph_after, source, targets, apsp_after, scores, ws, counters, trace);
}

struct FusedDependencyPass {
  template <bool Unit>
  static void run(const Graph& graph, const UpdateEvent& event, double old_weight, NodeId s,
                  std::span<const StagedPair> targets, const ApspState& apsp, Scores& scores, IbetWorkspace& ws,
                  OpCounters* counters, DependencyTrace* trace) {
    const double factor = graph.directed() ? 1.0 : 2.0;
    const double* dist = apsp.dist_row(s).data();
    const double* sigma = apsp.sigma_row(s).data();
    auto& queue = ws.queue_;
    auto& accum_old = ws.accum_;
    auto& accum_new = ws.accum_new_;
    // in_queue_ doubles as "old role requested"; the queue holds 2x for a
    // node's shared or old-role entry and 2x + 1 for a moved node's new-role entry.
    auto& want_old = ws.in_queue_;
    auto& want_new = ws.want_new_;
    ws.in_targets_.next();
    ws.moved_.next();
    want_old.next();
    want_new.next();
    ws.visited_.next();
    queue.reset(Unit, graph.node_count());
    DependencyTrace::Pass* old_record = nullptr;
    DependencyTrace::Pass* new_record = nullptr;
    if (trace) {
      trace->passes.push_back({s, false, {}});
      trace->passes.push_back({s, true, {}});
      old_record = &trace->passes[trace->passes.size() - 2];
      new_record = &trace->passes.back();
    }

    auto old_dist = [&](NodeId x) { return ws.in_targets_.test(x) ? ws.old_dist_[x] : dist[x]; };
    auto old_sigma = [&](NodeId x) { return ws.in_targets_.test(x) ? ws.old_sigma_[x] : sigma[x]; };
    auto push = [&](std::uint32_t item, double key) {
      queue.push(item, key);
      if (counters) IBET_COUNT(++counters->pq_inserts);
    };
    // visited_ marks unmoved nodes whose shared entry is already queued.
    auto request_old = [&](NodeId y) {
      if (!want_old.insert(y)) return;
      accum_old[y] = 0.0;
      if (ws.moved_.test(y))
        push(2 * y, old_dist(y));
      else if (ws.visited_.insert(y))
        push(2 * y, dist[y]);
    };
    auto request_new = [&](NodeId y) {
      if (!want_new.insert(y)) return;
      accum_new[y] = 0.0;
      if (ws.moved_.test(y))
        push(2 * y + 1, dist[y]);
      else if (ws.visited_.insert(y))
        push(2 * y, dist[y]);
    };

    for (const auto& pair : targets) {
      ws.in_targets_.set(pair.target);
      ws.old_dist_[pair.target] = pair.old_dist;
      ws.old_sigma_[pair.target] = pair.old_sigma;
      if (pair.dist != pair.old_dist) ws.moved_.set(pair.target);
    }
    for (const auto& pair : targets) {
      // Targets unreachable before the update had no old paths to remove.
      if (!std::isinf(pair.old_dist)) request_old(pair.target);
      request_new(pair.target);
    }

    auto tight = [](double from, double weight, double to) {
      if constexpr (Unit)
        return from + weight == to;
      else
        return !std::isinf(from) && dist_equal(from + weight, to);
    };

    while (!queue.empty()) {
      const std::uint32_t item = queue.pop();
      const NodeId x = item >> 1;
      const bool moved = ws.moved_.test(x);
      const bool as_old = (item & 1) == 0 && want_old.test(x);
      const bool as_new = moved ? (item & 1) == 1 : want_new.test(x);
      if (counters) IBET_COUNT(++counters->pq_extracts; ++counters->nodes_visited);
      const bool target = ws.in_targets_.test(x);

      double ratio_old = 0.0, level_old = 0.0, ratio_new = 0.0;
      if (as_old) {
        const double d = accum_old[x];
        scores[x] -= factor * d;
        if (old_record) old_record->extracted.emplace_back(x, d);
        ratio_old = (target ? 1.0 + d : d) / old_sigma(x);
        level_old = old_dist(x);
      }
      if (as_new) {
        const double d = accum_new[x];
        scores[x] += factor * d;
        if (new_record) new_record->extracted.emplace_back(x, d);
        ratio_new = (target ? 1.0 + d : d) / sigma[x];
      }
      const double level_new = dist[x];

      const auto in = graph.in(x);
      if (counters) IBET_COUNT(counters->edges_scanned += in.size());
      const bool is_v = x == event.v, is_u = !graph.directed() && x == event.u;
      for (const auto& arc : in) {
        const NodeId y = arc.node;
        const double dy = dist[y];
        if (as_new && tight(dy, arc.weight, level_new) && y != s) {
          request_new(y);
          accum_new[y] += sigma[y] * ratio_new;
        }
        // Old distances never undercut new ones, so d'(y) + w > d(x) rules y out.
        if (!as_old || (Unit && dy + arc.weight > level_old) || y == s) continue;
        const bool updated = (is_v && y == event.u) || (is_u && y == event.v);
        if (tight(old_dist(y), updated ? old_weight : arc.weight, level_old)) {
          request_old(y);
          accum_old[y] += old_sigma(y) * ratio_old;
        }
      }
    }
  }
};

void dependency_fused(const Graph& graph_after, const UpdateEvent& event, double old_weight, NodeId source,
                      std::span<const StagedPair> targets, const ApspState& apsp_after, Scores& scores,
                      IbetWorkspace& ws, OpCounters* counters, DependencyTrace* trace) {
  ws.ensure(graph_after.node_count());
  if (graph_after.weighted())
    FusedDependencyPass::run<false>(graph_after, event, old_weight, source, targets, apsp_after, scores, ws, counters,
                                    trace);
  else
    FusedDependencyPass::run<true>(graph_after, event, old_weight, source, targets, apsp_after, scores, ws, counters,
                                   trace);
}

UpdateReport ibet_update(Graph& graph, ApspState& apsp, Scores& scores, const UpdateEvent& event, IbetWorkspace& ws,
                         IbetObservers observers, IbetOptions options) {
  const auto t0 = Clock::now();
  UpdateReport report;
  report.outcome = graph.classify(event);
  if (report.outcome == UpdateOutcome::NoOp) {
    if (observers.delta) {
      *observers.delta = AffectedDelta{};
      observers.delta->event = event;
    }
    report.total_ns = elapsed_ns(t0, Clock::now());
    return report;
  }
  ws.ensure(graph.node_count());

  AffectedDelta delta = apsp_update(graph, event, apsp, ws, &report.apsp, options.choose_side);
  report.affected_sources = delta.sources_of_v.size();
  report.affected_targets = delta.targets.size();
  report.staged_pairs = delta.staged.size();
  if (!delta.active) {
    graph.apply_update(event);
    report.apsp_ns = report.total_ns = elapsed_ns(t0, Clock::now());
    if (observers.delta) *observers.delta = std::move(delta);
    return report;
  }

  const PairsBySource grouped = group_by_source(delta, graph.node_count());
  const std::size_t k = delta.sources_of_v.size();
  const double old_weight = graph.weight(event.u, event.v).value_or(kInfinity);
  const bool two_pass = options.dependency == DependencyMode::TwoPass;
  const auto t1 = Clock::now();
  if (two_pass)
    for (std::size_t i = 0; i < k; ++i)
      dependency_decrease(graph, delta.sources_of_v[i], grouped.of(i), apsp, scores, ws, &report.dependency,
                          observers.trace);
  const auto t2 = Clock::now();
  graph.apply_update(event);
  commit(apsp, delta, !graph.directed());
  const auto t3 = Clock::now();
  for (std::size_t i = 0; i < k; ++i) {
    if (two_pass)
      dependency_increase(graph, delta.sources_of_v[i], grouped.of(i), apsp, scores, ws, &report.dependency,
                          observers.trace);
    else
      dependency_fused(graph, delta.event, old_weight, delta.sources_of_v[i], grouped.of(i), apsp, scores, ws,
                       &report.dependency, observers.trace);
  }
  const auto t4 = Clock::now();

  report.apsp_ns = elapsed_ns(t0, t1) + elapsed_ns(t2, t3);
  report.dependency_ns = elapsed_ns(t1, t2) + elapsed_ns(t3, t4);
  report.total_ns = elapsed_ns(t0, t4);
  if (observers.delta) *observers.delta = std::move(delta);
  return report;
}

UpdateReport ibet_update(Graph& graph, ApspState& apsp, Scores& scores, const UpdateEvent& event,
                         IbetObservers observers, IbetOptions options) {
  IbetWorkspace ws(graph.node_count());
  return ibet_update(graph, apsp, scores, event, ws, observers, options);
}

}  // namespace ibet
