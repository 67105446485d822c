#include "ibet/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>

#include "ibet/apsp.hpp"
#include "ibet/baselines.hpp"
#include "ibet/brandes.hpp"
#include "ibet/csv.hpp"
#include "ibet/ibet.hpp"

namespace ibet {

namespace {

using Clock = std::chrono::steady_clock;

bool known_algorithm(const std::string& name) {
  return std::find_if(std::begin(kAlgorithmNames), std::end(kAlgorithmNames),
                      [&](const char* known) { return name == known; }) != std::end(kAlgorithmNames);
}

bool scores_match(double got, double want, double tolerance) {
  return std::abs(got - want) <= tolerance * std::max(1.0, std::abs(want));
}

bool apsp_match(const ApspState& got, const ApspState& want, double tolerance) {
  const std::size_t n = want.node_count();
  for (NodeId s = 0; s < n; ++s) {
    const auto gd = got.dist_row(s), wd = want.dist_row(s);
    const auto gs = got.sigma_row(s), ws = want.sigma_row(s);
    for (std::size_t t = 0; t < n; ++t)
      if (!dist_equal(gd[t], wd[t]) || !scores_match(gs[t], ws[t], tolerance)) return false;
  }
  return true;
}

AlgoResult from_report(const std::string& algo, const UpdateReport& report) {
  AlgoResult result;
  result.algo = algo;
  result.apsp_ns = report.apsp_ns;
  result.dependency_ns = report.dependency_ns;
  result.total_ns = report.total_ns;
  OpCounters counters = report.apsp;
  counters += report.dependency;
  result.counters = counters;
  result.affected_sources = report.affected_sources;
  result.staged_pairs = report.staged_pairs;
  return result;
}

void verify(AlgoResult& result, const Scores& got, const Scores& want, const ApspState* got_apsp,
            const ApspState* want_apsp, double tolerance) {
  result.max_err = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    result.max_err = std::max(result.max_err, std::abs(got[i] - want[i]));
    if (!scores_match(got[i], want[i], tolerance)) result.ok = false;
  }
  if (got_apsp && want_apsp && !apsp_match(*got_apsp, *want_apsp, tolerance)) result.ok = false;
}

}  // namespace

std::vector<std::pair<std::pair<NodeId, NodeId>, double>> sample_edges(const Graph& graph, std::size_t count,
                                                                       std::uint64_t seed) {
  auto edges = graph.edges();
  if (count > edges.size())
    throw std::invalid_argument("requested " + std::to_string(count) + " distinct edges but the graph has " +
                                std::to_string(edges.size()));
  // Partial Fisher-Yates: the first `count` slots become the sample.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, edges.size() - 1);
    std::swap(edges[i], edges[pick(rng)]);
  }
  edges.resize(count);
  return edges;
}

double geometric_mean(const std::vector<double>& values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  for (double x : values) sum += std::log(x);
  return std::exp(sum / double(values.size()));
}

namespace {
const AlgoResult* find_result(const TrialRecord& record, const std::string& algo) {
  if (algo == "ba") return &record.ba;
  for (const auto& result : record.engines)
    if (result.algo == algo) return &result;
  return nullptr;
}

double clamp_ns(std::int64_t ns) { return double(std::max<std::int64_t>(ns, 1)); }
}  // namespace

double speedup(const std::vector<TrialRecord>& records, const std::string& numerator, const std::string& denominator) {
  std::vector<double> ratios;
  for (const auto& record : records) {
    const auto* slow = find_result(record, numerator);
    const auto* fast = find_result(record, denominator);
    if (!slow || !fast) throw std::invalid_argument("no timings for " + numerator + " or " + denominator);
    ratios.push_back(clamp_ns(slow->total_ns) / clamp_ns(fast->total_ns));
  }
  return geometric_mean(ratios);
}

BenchResult run_experiment(const Graph& graph, const BenchConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");
  std::vector<std::string> engines;
  for (const auto& algo : config.algos) {
    if (!known_algorithm(algo)) throw std::invalid_argument("unknown algorithm '" + algo + "'");
    if (algo != "ba" && std::find(engines.begin(), engines.end(), algo) == engines.end()) engines.push_back(algo);
  }
  const bool with_kdb = std::find(engines.begin(), engines.end(), "kdb") != engines.end();
  if (with_kdb && graph.weighted()) throw UnsupportedError("kdb handles unit-weight graphs only");

  const std::size_t n = graph.node_count();
  // Base state plus one engine copy alive at a time, plus the reference matrices.
  const std::size_t per_state = with_kdb ? 3 : 2;
  ensure_capacity(n, 2 * per_state + (config.verify ? 2 : 0));

  BenchResult out;
  const auto edges = sample_edges(graph, config.trials, config.seed);
  IbetWorkspace ibet_ws(n);
  KdbWorkspace kdb_ws(n);
  KwccWorkspace kwcc_ws(n);

  for (std::size_t trial = 0; trial < edges.size(); ++trial) {
    const auto& [edge, weight] = edges[trial];
    const UpdateEvent event{edge.first, edge.second, weight};
    TrialRecord record{trial, edge.first, edge.second, weight, {}, {}};

    Graph without = graph;
    without.remove_edge(edge.first, edge.second);
    const StaticState base = init_static_state(without, with_kdb);

    StaticPhaseTimes phases;
    const auto t0 = Clock::now();
    const Scores reference = brandes_betweenness(graph, &phases);
    record.ba.algo = "ba";
    record.ba.total_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
    record.ba.apsp_ns = phases.sssp_ns;
    record.ba.dependency_ns = phases.accumulation_ns;
    std::optional<ApspState> reference_apsp;
    if (config.verify) reference_apsp = init_apsp(graph);

    for (const auto& algo : engines) {
      Graph g = without;
      AlgoResult result;
      if (algo == "kdb") {
        KdbState state{base.apsp, base.dependencies};
        Scores scores = base.scores;
        result = from_report(algo, kdb_update(g, state, scores, event, kdb_ws));
        if (config.verify) verify(result, scores, reference, &state.apsp, &*reference_apsp, config.tolerance);
      } else {
        ApspState apsp = base.apsp;
        Scores scores = base.scores;
        UpdateReport report;
        if (algo == "ibet")
          report = ibet_update(g, apsp, scores, event, ibet_ws);
        else if (algo == "ibet-literal")
          report = ibet_update(g, apsp, scores, event, ibet_ws, {}, {DependencyMode::TwoPass, false});
        else
          report = kwcc_update(g, apsp, scores, event, kwcc_ws);
        result = from_report(algo, report);
        if (config.verify) verify(result, scores, reference, &apsp, &*reference_apsp, config.tolerance);
      }
      if (!config.verify) result.max_err = std::numeric_limits<double>::quiet_NaN();
      record.engines.push_back(std::move(result));
    }
    out.records.push_back(std::move(record));
  }

  auto& summary = out.summary;
  for (const auto& record : out.records)
    for (const auto& result : record.engines) {
      summary.all_ok = summary.all_ok && result.ok;
      if (!std::isnan(result.max_err)) summary.max_err = std::max(summary.max_err, result.max_err);
    }
  summary.verified = config.verify;
  if (!config.verify) summary.max_err = std::numeric_limits<double>::quiet_NaN();
  for (const auto& algo : engines) summary.versus_static.push_back({"ba", algo, speedup(out.records, "ba", algo)});
  for (std::size_t i = 0; i < engines.size(); ++i)
    for (std::size_t j = i + 1; j < engines.size(); ++j)
      summary.pairwise.push_back({engines[j], engines[i], speedup(out.records, engines[j], engines[i])});
  return out;
}

void emit_csv(const std::vector<TrialRecord>& records, std::ostream& out, bool include_static, bool with_counters) {
  const std::vector<std::string> header(std::begin(kCsvColumns), std::end(kCsvColumns));
  csv::write_row(out, header);
  auto row = [&](std::size_t trial, const AlgoResult& result) {
    std::vector<std::string> fields = {std::to_string(trial),
                                       result.algo,
                                       std::to_string(result.apsp_ns),
                                       std::to_string(result.dependency_ns),
                                       std::to_string(result.total_ns),
                                       csv::format_double(result.max_err)};
    if (with_counters && result.counters) {
      fields.push_back(std::to_string(result.counters->nodes_visited));
      fields.push_back(std::to_string(result.counters->edges_scanned));
      fields.push_back(std::to_string(result.counters->source_list_scans));
    } else {
      fields.resize(fields.size() + 3);
    }
    csv::write_row(out, fields);
  };
  for (const auto& record : records) {
    if (include_static) row(record.trial, record.ba);
    for (const auto& result : record.engines) row(record.trial, result);
  }
}

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path, bool include_static,
              bool with_counters) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_csv(records, out, include_static, with_counters);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void print_summary(const BenchSummary& summary, std::ostream& out) {
  for (const auto& s : summary.versus_static)
    out << "speedup " << s.denominator << " over " << s.numerator << ": " << csv::format_double(s.geometric_mean)
        << "\n";
  for (const auto& s : summary.pairwise)
    out << "speedup " << s.denominator << " over " << s.numerator << ": " << csv::format_double(s.geometric_mean)
        << "\n";
  out << "max_err: " << csv::format_double(summary.max_err) << "\n";
  out << "verified: " << (!summary.verified ? "skipped" : summary.all_ok ? "yes" : "MISMATCH") << "\n";
}

}  // namespace ibet
