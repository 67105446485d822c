#include "ibet/counters.hpp"

#include <cmath>
#include <vector>

#include "ibet/oracle.hpp"

namespace ibet {

namespace {

std::uint64_t degree(const Graph& graph, NodeId node) {
  const std::uint64_t out = graph.out(node).size();
  return graph.directed() ? out + graph.in(node).size() : out;
}

/// T(s) plus every node on a shortest s-t path for t in T(s), endpoints excluded.
std::vector<NodeId> tau(const oracle::AllPairs& apsp, NodeId s, const std::vector<NodeId>& targets) {
  std::vector<std::uint8_t> member(apsp.n, 0);
  for (NodeId t : targets) {
    member[t] = 1;
    if (std::isinf(apsp.d(s, t))) continue;
    for (NodeId y = 0; y < apsp.n; ++y) {
      if (y == s || y == t) continue;
      if (dist_equal(apsp.d(s, y) + apsp.d(y, t), apsp.d(s, t))) member[y] = 1;
    }
  }
  std::vector<NodeId> nodes;
  for (NodeId y = 0; y < apsp.n; ++y)
    if (member[y]) nodes.push_back(y);
  return nodes;
}

double heap_term(std::size_t size) { return size > 1 ? double(size) * std::log2(double(size)) : 0.0; }

}  // namespace

std::uint64_t extended_size(const Graph& graph, std::span<const NodeId> nodes) {
  std::uint64_t total = nodes.size();
  for (NodeId node : nodes) total += degree(graph, node);
  return total;
}

BoundsVerdict check_bounds(const UpdateReport& report, const Graph& graph_before, const AffectedDelta& delta,
                           double constant) {
  BoundsVerdict verdict;
  verdict.constant = constant;
  verdict.apsp_ops = report.apsp.total();
  verdict.dependency_ops = report.dependency.total();
  if (report.outcome == UpdateOutcome::NoOp) {
    verdict.apsp_ok = verdict.apsp_ops == 0;
    verdict.dependency_ok = verdict.dependency_ops == 0;
    return verdict;
  }

  Graph graph_after = graph_before;
  graph_after.apply_update(delta.event);
  const auto before = oracle::all_pairs(graph_before);
  const auto after = oracle::all_pairs(graph_after);
  const auto pairs = oracle::affected_pairs(before, after);

  const std::size_t n = graph_before.node_count();
  std::vector<std::vector<NodeId>> sources_of(n), targets_of(n);
  for (const auto& [s, t] : pairs) {
    sources_of[t].push_back(s);
    targets_of[s].push_back(t);
  }
  const NodeId u = delta.event.u, v = delta.event.v;

  double apsp_bound = double(extended_size(graph_before, sources_of[v])) +
                      double(extended_size(graph_before, targets_of[u]));
  for (std::size_t i = 0; i < delta.targets.size(); ++i) apsp_bound += double(sources_of[delta.predecessor[i]].size());
  verdict.apsp_bound = apsp_bound;

  double dependency_bound = 0.0;
  for (NodeId s = 0; s < n; ++s) {
    if (targets_of[s].empty()) continue;
    const auto old_tau = tau(before, s, targets_of[s]);
    const auto new_tau = tau(after, s, targets_of[s]);
    dependency_bound += double(extended_size(graph_before, old_tau)) + double(extended_size(graph_after, new_tau));
    if (graph_before.weighted()) dependency_bound += heap_term(old_tau.size()) + heap_term(new_tau.size());
  }
  verdict.dependency_bound = dependency_bound;

  verdict.apsp_ok = double(verdict.apsp_ops) <= constant * apsp_bound;
  verdict.dependency_ok = double(verdict.dependency_ops) <= constant * dependency_bound;
  return verdict;
}

}  // namespace ibet
