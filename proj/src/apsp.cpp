#include "ibet/apsp.hpp"

#include <cstdlib>
#include <string>

#include "ibet/brandes.hpp"

namespace ibet {

ApspState::ApspState(std::size_t node_count)
    : n_(node_count), dist_(node_count * node_count, kInfinity), sigma_(node_count * node_count, 0.0) {}

ApspState init_apsp(const Graph& graph) {
  const std::size_t n = graph.node_count();
  ensure_capacity(n, 2);
  ApspState state(n);
  SsspRunner runner(n);
  for (NodeId s = 0; s < n; ++s) {
    const auto& sssp = runner.run(graph, s);
    auto dist = state.dist_row(s);
    auto sigma = state.sigma_row(s);
    for (NodeId t : sssp.settle_order) {
      dist[t] = sssp.dist[t];
      sigma[t] = sssp.sigma[t];
    }
  }
  return state;
}

StaticState init_static_state(const Graph& graph, bool keep_dependencies) {
  const std::size_t n = graph.node_count();
  ensure_capacity(n, keep_dependencies ? 3 : 2);
  StaticState out{ApspState(n), Scores(n, 0.0), {}};
  if (keep_dependencies) out.dependencies.assign(n * n, 0.0);
  SsspRunner runner(n);
  for (NodeId s = 0; s < n; ++s) {
    const auto& sssp = runner.run(graph, s);
    const auto& delta = runner.accumulate(graph);
    auto dist = out.apsp.dist_row(s);
    auto sigma = out.apsp.sigma_row(s);
    double* dep = keep_dependencies ? out.dependencies.data() + std::size_t(s) * n : nullptr;
    for (NodeId t : sssp.settle_order) {
      dist[t] = sssp.dist[t];
      sigma[t] = sssp.sigma[t];
      if (t != s) {
        out.scores[t] += delta[t];
        if (dep) dep[t] = delta[t];
      }
    }
  }
  return out;
}

void commit(ApspState& state, const AffectedDelta& delta, bool undirected) {
  for (const auto& pair : delta.staged) {
    if (dist_less(state.dist(pair.source, pair.target), pair.dist))
      throw std::logic_error("staged distance increases d(" + std::to_string(pair.source) + ", " +
                             std::to_string(pair.target) + ")");
    state.set(pair.source, pair.target, pair.dist, pair.sigma);
    if (undirected) state.set(pair.target, pair.source, pair.dist, pair.sigma);
  }
}

std::size_t quadratic_bytes(std::size_t node_count, std::size_t matrices) {
  return node_count * node_count * sizeof(double) * matrices;
}

std::size_t memory_cap_bytes() {
  if (const char* env = std::getenv("IBET_MEMORY_CAP_BYTES"); env && *env) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("IBET_MEMORY_CAP_BYTES is not a byte count: ") + env);
    }
  }
  return std::size_t{4} << 30;
}

void ensure_capacity(std::size_t node_count, std::size_t matrices) {
  const auto need = quadratic_bytes(node_count, matrices);
  const auto cap = memory_cap_bytes();
  if (need > cap)
    throw CapacityError("graph with " + std::to_string(node_count) + " nodes needs " + std::to_string(need) +
                        " bytes of dense state, cap is " + std::to_string(cap) +
                        " (set IBET_MEMORY_CAP_BYTES to raise it)");
}

}  // namespace ibet
