#include "ibet/brandes.hpp"

#include <chrono>
#include <queue>

namespace ibet {

SsspRunner::SsspRunner(std::size_t node_count)
    : delta_(node_count, 0.0), settled_(node_count, 0) {
  result_.dist.assign(node_count, kInfinity);
  result_.sigma.assign(node_count, 0.0);
  result_.settle_order.reserve(node_count);
  queue_.reserve(node_count);
}

const SsspResult& SsspRunner::run(const Graph& graph, NodeId source) {
  // Only entries touched by the previous run need resetting.
  for (NodeId node : result_.settle_order) {
    result_.dist[node] = kInfinity;
    result_.sigma[node] = 0.0;
    settled_[node] = 0;
  }
  result_.settle_order.clear();
  result_.source = source;
  if (graph.weighted())
    run_dijkstra(graph, source);
  else
    run_bfs(graph, source);
  return result_;
}

void SsspRunner::run_bfs(const Graph& graph, NodeId source) {
  auto& dist = result_.dist;
  auto& sigma = result_.sigma;
  auto& order = result_.settle_order;
  dist[source] = 0.0;
  sigma[source] = 1.0;
  order.push_back(source);
  // settle_order doubles as the FIFO queue.
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId x = order[head];
    const double next = dist[x] + 1.0;
    for (const auto& arc : graph.out(x)) {
      const NodeId y = arc.node;
      if (dist[y] == kInfinity) {
        dist[y] = next;
        order.push_back(y);
      }
      if (dist[y] == next) sigma[y] += sigma[x];
    }
  }
}

void SsspRunner::run_dijkstra(const Graph& graph, NodeId source) {
  auto& dist = result_.dist;
  auto& sigma = result_.sigma;
  auto& order = result_.settle_order;
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (settled_[x] || d > dist[x]) continue;
    settled_[x] = 1;
    order.push_back(x);
    if (x == source) {
      sigma[x] = 1.0;
    } else {
      double count = 0.0;
      for (const auto& arc : graph.in(x))
        if (settled_[arc.node] && dist_equal(dist[arc.node] + arc.weight, d)) count += sigma[arc.node];
      sigma[x] = count;
    }
    for (const auto& arc : graph.out(x)) {
      const double candidate = d + arc.weight;
      if (candidate < dist[arc.node]) {
        dist[arc.node] = candidate;
        heap.push({candidate, arc.node});
      }
    }
  }
}

const std::vector<double>& SsspRunner::accumulate(const Graph& graph) {
  const auto& dist = result_.dist;
  const auto& sigma = result_.sigma;
  const auto& order = result_.settle_order;
  for (NodeId node : order) delta_[node] = 0.0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId x = *it;
    double sum = 0.0;
    for (const auto& arc : graph.out(x)) {
      const NodeId w = arc.node;
      if (sigma[w] > 0.0 && dist_equal(dist[x] + arc.weight, dist[w])) sum += (1.0 + delta_[w]) / sigma[w];
    }
    delta_[x] = sigma[x] * sum;
  }
  return delta_;
}

SsspResult sssp_augmented(const Graph& graph, NodeId source) {
  if (source >= graph.node_count()) throw std::out_of_range("source out of range");
  SsspRunner runner(graph.node_count());
  return runner.run(graph, source);
}

std::vector<double> accumulate_dependencies(const Graph& graph, const SsspResult& sssp) {
  const std::size_t n = graph.node_count();
  std::vector<double> delta(n, 0.0);
  for (auto it = sssp.settle_order.rbegin(); it != sssp.settle_order.rend(); ++it) {
    const NodeId x = *it;
    double sum = 0.0;
    for (const auto& arc : graph.out(x)) {
      const NodeId w = arc.node;
      if (sssp.sigma[w] > 0.0 && dist_equal(sssp.dist[x] + arc.weight, sssp.dist[w]))
        sum += (1.0 + delta[w]) / sssp.sigma[w];
    }
    delta[x] = sssp.sigma[x] * sum;
  }
  return delta;
}

Scores brandes_betweenness(const Graph& graph, StaticPhaseTimes* times) {
  using Clock = std::chrono::steady_clock;
  const std::size_t n = graph.node_count();
  Scores scores(n, 0.0);
  SsspRunner runner(n);
  for (NodeId s = 0; s < n; ++s) {
    const auto t0 = times ? Clock::now() : Clock::time_point{};
    const auto& sssp = runner.run(graph, s);
    const auto t1 = times ? Clock::now() : Clock::time_point{};
    const auto& delta = runner.accumulate(graph);
    for (NodeId node : sssp.settle_order)
      if (node != s) scores[node] += delta[node];
    if (times) {
      const auto t2 = Clock::now();
      times->sssp_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      times->accumulation_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
    }
  }
  return scores;
}

}  // namespace ibet
