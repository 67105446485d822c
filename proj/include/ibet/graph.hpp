#pragma once

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ibet/types.hpp"

namespace ibet {

struct Arc {
  NodeId node;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct UpdateEvent {
  NodeId u;
  NodeId v;
  double new_weight = 1.0;
};

enum class UpdateOutcome { Inserted, Decreased, NoOp };

const char* to_string(UpdateOutcome outcome);

/// Mutable weighted digraph with out- and in-adjacency. Undirected graphs keep
/// both orientations of every edge, so out_adj and in_adj hold the same lists.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t node_count, bool directed, bool weighted);

  std::size_t node_count() const { return out_.size(); }
  /// Edges for undirected graphs, arcs for directed ones.
  std::size_t edge_count() const { return edge_count_; }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  std::span<const Arc> out(NodeId node) const { return out_[node]; }
  std::span<const Arc> in(NodeId node) const { return in_[node]; }
  std::optional<double> weight(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return weight(u, v).has_value(); }

  /// Adds an isolated node and returns its id.
  NodeId add_node(std::string label = {});

  /// Adds (u, v, w), or lowers the weight of an existing edge to w if w is lighter.
  /// Self-loops are ignored. Used by ingestion; incremental callers use apply_update.
  void add_edge_min(NodeId u, NodeId v, double w);

  /// What apply_update would do, without mutating. Throws on invalid events.
  UpdateOutcome classify(const UpdateEvent& event) const;
  UpdateOutcome apply_update(const UpdateEvent& event);
  double remove_edge(NodeId u, NodeId v);

  /// Original label of a node; defaults to its decimal id.
  const std::string& label(NodeId node) const { return labels_[node]; }
  void set_label(NodeId node, std::string label) { labels_[node] = std::move(label); }

  /// Each edge once: (u, v, w) with u < v for undirected graphs. Sorted.
  std::vector<std::pair<std::pair<NodeId, NodeId>, double>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_node(NodeId node) const;
  void set_arc(NodeId u, NodeId v, double w);
  void erase_arc(NodeId u, NodeId v);

  bool directed_ = false;
  bool weighted_ = false;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::vector<std::string> labels_;
};

/// Parses a whitespace-delimited edge list: "u v" or "u v w" per line, lines
/// starting with '#' or '%' are comments. Labels are compacted to 0..n-1 in
/// order of first appearance.
Graph load_edge_list(std::istream& in, bool directed, bool weighted);
Graph load_edge_list_file(const std::string& path, bool directed, bool weighted);

}  // namespace ibet
