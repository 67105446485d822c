#include "ibet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace ibet {

const char* to_string(UpdateOutcome outcome) {
  switch (outcome) {
    case UpdateOutcome::Inserted: return "inserted";
    case UpdateOutcome::Decreased: return "decreased";
    case UpdateOutcome::NoOp: return "noop";
  }
  return "?";
}

Graph::Graph(std::size_t node_count, bool directed, bool weighted)
    : directed_(directed), weighted_(weighted), out_(node_count), in_(node_count) {
  labels_.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) labels_.push_back(std::to_string(i));
}

NodeId Graph::add_node(std::string label) {
  const auto id = static_cast<NodeId>(out_.size());
  out_.emplace_back();
  in_.emplace_back();
  labels_.push_back(label.empty() ? std::to_string(id) : std::move(label));
  return id;
}

void Graph::check_node(NodeId node) const {
  if (node >= out_.size()) throw std::out_of_range("node id " + std::to_string(node) + " out of range");
}

std::optional<double> Graph::weight(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  for (const auto& arc : out_[u])
    if (arc.node == v) return arc.weight;
  return std::nullopt;
}

void Graph::set_arc(NodeId u, NodeId v, double w) {
  auto update = [](std::vector<Arc>& list, NodeId target, double weight) {
    for (auto& arc : list) {
      if (arc.node == target) {
        arc.weight = weight;
        return;
      }
    }
    list.push_back({target, weight});
  };
  update(out_[u], v, w);
  update(in_[v], u, w);
}

void Graph::erase_arc(NodeId u, NodeId v) {
  auto erase = [](std::vector<Arc>& list, NodeId target) {
    auto it = std::find_if(list.begin(), list.end(), [&](const Arc& a) { return a.node == target; });
    list.erase(it);
  };
  erase(out_[u], v);
  erase(in_[v], u);
}

void Graph::add_edge_min(NodeId u, NodeId v, double w) {
  check_node(u);
  check_node(v);
  if (!(w > 0.0) || !std::isfinite(w)) throw std::domain_error("edge weight must be positive and finite");
  if (u == v) return;
  if (!weighted_) w = 1.0;
  const auto current = weight(u, v);
  if (current && *current <= w) return;
  if (!current) ++edge_count_;
  set_arc(u, v, w);
  if (!directed_) set_arc(v, u, w);
}

UpdateOutcome Graph::classify(const UpdateEvent& event) const {
  check_node(event.u);
  check_node(event.v);
  if (event.u == event.v) throw std::invalid_argument("update endpoints must differ");
  if (!(event.new_weight > 0.0) || !std::isfinite(event.new_weight))
    throw std::domain_error("update weight must be positive and finite");
  if (!weighted_ && event.new_weight != 1.0)
    throw std::domain_error("unit-weight graphs only accept weight 1");
  const auto current = weight(event.u, event.v);
  if (!current) return UpdateOutcome::Inserted;
  if (*current <= event.new_weight) {
    if (*current < event.new_weight)
      throw UnsupportedError("weight increase on existing edge (decremental updates are unsupported)");
    return UpdateOutcome::NoOp;
  }
  return UpdateOutcome::Decreased;
}

UpdateOutcome Graph::apply_update(const UpdateEvent& event) {
  const auto outcome = classify(event);
  if (outcome == UpdateOutcome::NoOp) return outcome;
  if (outcome == UpdateOutcome::Inserted) ++edge_count_;
  set_arc(event.u, event.v, event.new_weight);
  if (!directed_) set_arc(event.v, event.u, event.new_weight);
  return outcome;
}

double Graph::remove_edge(NodeId u, NodeId v) {
  const auto current = weight(u, v);
  if (!current) throw NotFoundError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") not present");
  erase_arc(u, v);
  if (!directed_) erase_arc(v, u);
  --edge_count_;
  return *current;
}

std::vector<std::pair<std::pair<NodeId, NodeId>, double>> Graph::edges() const {
  std::vector<std::pair<std::pair<NodeId, NodeId>, double>> result;
  result.reserve(edge_count_);
  for (NodeId u = 0; u < out_.size(); ++u)
    for (const auto& arc : out_[u])
      if (directed_ || u < arc.node) result.push_back({{u, arc.node}, arc.weight});
  std::sort(result.begin(), result.end());
  return result;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.directed_ != b.directed_ || a.weighted_ != b.weighted_ || a.node_count() != b.node_count() ||
      a.edge_count_ != b.edge_count_)
    return false;
  auto sorted = [](std::vector<Arc> list) {
    std::sort(list.begin(), list.end(), [](const Arc& x, const Arc& y) { return x.node < y.node; });
    return list;
  };
  for (std::size_t i = 0; i < a.out_.size(); ++i) {
    if (sorted(a.out_[i]) != sorted(b.out_[i])) return false;
    if (sorted(a.in_[i]) != sorted(b.in_[i])) return false;
  }
  return true;
}

namespace {

bool parse_weight(std::string_view token, double& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Graph load_edge_list(std::istream& in, bool directed, bool weighted) {
  Graph graph(0, directed, weighted);
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, 0);
    if (inserted) it->second = graph.add_node(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;

    std::istringstream fields(line);
    std::string a, b, w;
    fields >> a >> b;
    if (b.empty()) throw ParseError(line_no, "expected \"u v\" or \"u v w\"");
    double weight = 1.0;
    if (fields >> w) {
      if (!parse_weight(w, weight)) throw ParseError(line_no, "malformed weight '" + w + "'");
      if (!(weight > 0.0) || !std::isfinite(weight))
        throw std::domain_error("line " + std::to_string(line_no) + ": edge weight must be positive");
      std::string extra;
      if (weighted && (fields >> extra)) throw ParseError(line_no, "trailing field '" + extra + "'");
    }
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    graph.add_edge_min(u, v, weighted ? weight : 1.0);
  }
  return graph;
}

Graph load_edge_list_file(const std::string& path, bool directed, bool weighted) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in, directed, weighted);
}

}  // namespace ibet
