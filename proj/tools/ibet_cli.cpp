#include <algorithm>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ibet/bench.hpp"
#include "ibet/brandes.hpp"
#include "ibet/csv.hpp"
#include "ibet/graph.hpp"

namespace {

struct GraphOptions {
  std::string path;
  bool directed = false;
  bool weighted = false;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
  cmd->add_option("--graph", opts.path, "Edge-list file")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--directed", opts.directed, "Treat edges as arcs");
  cmd->add_flag("--weighted", opts.weighted, "Read a third weight column");
}

struct BenchOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> algos = {"ibet"};
  bool no_verify = false;
  bool counters = false;
  double tolerance = 1e-8;
  std::string out;
};

void add_bench_options(CLI::App* cmd, BenchOptions& opts, bool with_verify_switch) {
  cmd->add_option("--trials", opts.trials, "Number of sampled edges")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "Sampling seed");
  cmd->add_option("--algos", opts.algos, "Comma-separated: ba, ibet, kdb, kwcc, ibet-literal")
      ->delimiter(',')
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(ibet::kAlgorithmNames), std::end(ibet::kAlgorithmNames))));
  cmd->add_option("--tolerance", opts.tolerance, "Relative score tolerance");
  cmd->add_flag("--counters", opts.counters, "Fill the operation-counter columns");
  if (with_verify_switch) cmd->add_flag("--no-verify", opts.no_verify, "Skip the comparison with recomputation");
}

ibet::BenchResult run(const GraphOptions& graph_opts, const BenchOptions& opts, bool verify) {
  const auto graph = ibet::load_edge_list_file(graph_opts.path, graph_opts.directed, graph_opts.weighted);
  ibet::BenchConfig config;
  config.algos = opts.algos;
  config.trials = opts.trials;
  config.seed = opts.seed;
  config.verify = verify;
  config.tolerance = opts.tolerance;
  auto result = ibet::run_experiment(graph, config);
  ibet::print_summary(result.summary, std::cout);
  return result;
}

bool lists_static(const BenchOptions& opts) {
  return std::find(opts.algos.begin(), opts.algos.end(), "ba") != opts.algos.end();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact betweenness centrality under edge insertions"};
  app.require_subcommand(1);

  GraphOptions compute_graph;
  std::string compute_out;
  auto* compute = app.add_subcommand("compute", "Static scores for every node");
  add_graph_options(compute, compute_graph);
  compute->add_option("--out", compute_out, "Output CSV (node,score)")->required();

  GraphOptions bench_graph;
  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Remove, recompute and re-insert sampled edges");
  add_graph_options(bench, bench_graph);
  add_bench_options(bench, bench_opts, true);
  bench->add_option("--out", bench_opts.out, "Per-trial CSV")->required();

  GraphOptions verify_graph;
  BenchOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Exit nonzero when any engine disagrees with recomputation");
  add_graph_options(verify, verify_graph);
  add_bench_options(verify, verify_opts, false);
  verify->add_option("--out", verify_opts.out, "Optional per-trial CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      const auto graph = ibet::load_edge_list_file(compute_graph.path, compute_graph.directed, compute_graph.weighted);
      const auto scores = ibet::brandes_betweenness(graph);
      std::ofstream out(compute_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open '" + compute_out + "' for writing");
      const std::vector<std::string> header = {"node", "score"};
      ibet::csv::write_row(out, header);
      for (ibet::NodeId node = 0; node < graph.node_count(); ++node) {
        const std::vector<std::string> row = {graph.label(node), ibet::csv::format_double(scores[node])};
        ibet::csv::write_row(out, row);
      }
      if (!out.flush()) throw std::runtime_error("write to '" + compute_out + "' failed");
      return 0;
    }
    if (*bench) {
      const auto result = run(bench_graph, bench_opts, !bench_opts.no_verify);
      ibet::emit_csv(result.records, bench_opts.out, lists_static(bench_opts), bench_opts.counters);
      return result.summary.all_ok ? 0 : 1;
    }
    const auto result = run(verify_graph, verify_opts, true);
    if (!verify_opts.out.empty())
      ibet::emit_csv(result.records, verify_opts.out, lists_static(verify_opts), verify_opts.counters);
    return result.summary.all_ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
