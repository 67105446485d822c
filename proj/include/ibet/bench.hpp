#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ibet/counters.hpp"
#include "ibet/graph.hpp"

namespace ibet {

/// Engine names accepted in BenchConfig::algos. "ba" adds rows for the
/// static recomputation, which is timed on every trial regardless.
/// "ibet-literal" runs the separate decrease and increase passes over the
/// given edge orientation.
inline constexpr const char* kAlgorithmNames[] = {"ba", "ibet", "kdb", "kwcc", "ibet-literal"};

struct BenchConfig {
  std::vector<std::string> algos = {"ibet"};
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool verify = true;
  /// Scores match when |got - want| <= tolerance * max(1, |want|).
  double tolerance = 1e-8;
};

struct AlgoResult {
  std::string algo;
  std::int64_t apsp_ns = 0;
  std::int64_t dependency_ns = 0;
  std::int64_t total_ns = 0;
  /// Max absolute score difference from the static recomputation; NaN when not verified.
  double max_err = 0.0;
  /// Scores within tolerance and APSP matrices equal to a fresh recomputation.
  bool ok = true;
  /// Both phases summed. Absent for "ba".
  std::optional<OpCounters> counters;
  std::size_t affected_sources = 0;
  std::size_t staged_pairs = 0;
};

struct TrialRecord {
  std::size_t trial = 0;
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
  /// Timed static run on the graph with the edge present.
  AlgoResult ba;
  /// Incremental engines in config order.
  std::vector<AlgoResult> engines;
};

struct Speedup {
  std::string numerator;    ///< slower side, its time on top
  std::string denominator;  ///< faster side
  double geometric_mean = 0.0;
};

struct BenchSummary {
  /// Engine over ba, for each engine.
  std::vector<Speedup> versus_static;
  /// For engines a before b in config order: time(b) / time(a).
  std::vector<Speedup> pairwise;
  bool verified = true;
  bool all_ok = true;
  double max_err = 0.0;
};

struct BenchResult {
  std::vector<TrialRecord> records;
  BenchSummary summary;
};

/// Samples config.trials distinct edges, and for each: removes it, builds the
/// static state, re-inserts it through every engine on its own copy, and times
/// the static recomputation on the restored graph. Throws CapacityError before
/// allocating when the quadratic state would exceed the memory cap.
BenchResult run_experiment(const Graph& graph, const BenchConfig& config);

/// Deterministic distinct edge sample, same order as the trials.
std::vector<std::pair<std::pair<NodeId, NodeId>, double>> sample_edges(const Graph& graph, std::size_t count,
                                                                       std::uint64_t seed);

/// exp(mean(ln(x_i))).
double geometric_mean(const std::vector<double>& values);

/// Geometric mean over trials of numerator.total_ns / denominator.total_ns.
double speedup(const std::vector<TrialRecord>& records, const std::string& numerator, const std::string& denominator);

inline constexpr const char* kCsvColumns[] = {"trial",    "algo",          "phase_apsp_ns",
                                              "phase_dep_ns", "total_ns",  "max_err",
                                              "nodes_visited", "edges_scanned", "source_list_scans"};

/// Header plus one row per trial per algorithm. "ba" rows appear only when
/// `include_static` is set; counter fields are empty unless `with_counters`.
void emit_csv(const std::vector<TrialRecord>& records, std::ostream& out, bool include_static, bool with_counters);
void emit_csv(const std::vector<TrialRecord>& records, const std::string& path, bool include_static,
              bool with_counters);

void print_summary(const BenchSummary& summary, std::ostream& out);

}  // namespace ibet
