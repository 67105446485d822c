#pragma once

#include <cstdint>
#include <span>

#include "ibet/apsp.hpp"
#include "ibet/graph.hpp"

// Operation counting compiles away with -DIBET_COUNTERS=0.
#ifndef IBET_COUNTERS
#define IBET_COUNTERS 1
#endif

#if IBET_COUNTERS
#define IBET_COUNT(stmt) \
  do {                   \
    stmt;                \
  } while (0)
#else
#define IBET_COUNT(stmt) \
  do {                   \
  } while (0)
#endif

namespace ibet {

struct OpCounters {
  std::uint64_t nodes_visited = 0;
  std::uint64_t edges_scanned = 0;
  /// Entries of S(p(t)) inspected while staging pairs.
  std::uint64_t source_list_scans = 0;
  std::uint64_t pq_inserts = 0;
  std::uint64_t pq_extracts = 0;

  std::uint64_t total() const {
    return nodes_visited + edges_scanned + source_list_scans + pq_inserts + pq_extracts;
  }
  OpCounters& operator+=(const OpCounters& o) {
    nodes_visited += o.nodes_visited;
    edges_scanned += o.edges_scanned;
    source_list_scans += o.source_list_scans;
    pq_inserts += o.pq_inserts;
    pq_extracts += o.pq_extracts;
    return *this;
  }
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// Outcome and cost of one incremental update, shared by all engines.
struct UpdateReport {
  UpdateOutcome outcome = UpdateOutcome::NoOp;
  std::size_t affected_sources = 0;
  std::size_t affected_targets = 0;
  std::size_t staged_pairs = 0;
  OpCounters apsp;
  OpCounters dependency;
  std::int64_t apsp_ns = 0;
  std::int64_t dependency_ns = 0;
  std::int64_t total_ns = 0;
};

/// |A| plus the edges incident to members of A, each counted once per member
/// endpoint. Directed graphs count in- and out-arcs.
std::uint64_t extended_size(const Graph& graph, std::span<const NodeId> nodes);

struct BoundsVerdict {
  double constant = 4.0;
  /// ||S(v)|| + ||T(u)|| + sum over t in T(u) of |S(p(t))|.
  double apsp_bound = 0.0;
  /// sum over affected s of ||tau(s)|| + ||tau'(s)||, plus the heap log terms on weighted graphs.
  double dependency_bound = 0.0;
  std::uint64_t apsp_ops = 0;
  std::uint64_t dependency_ops = 0;
  bool apsp_ok = true;
  bool dependency_ok = true;

  bool ok() const { return apsp_ok && dependency_ok; }
};

/// Compares an update's counters against the running-time expressions,
/// evaluated from an independent recomputation of both graphs' augmented APSP.
/// `delta` supplies only the BFS predecessors p(t) and the event.
BoundsVerdict check_bounds(const UpdateReport& report, const Graph& graph_before, const AffectedDelta& delta,
                           double constant = 4.0);

}  // namespace ibet
