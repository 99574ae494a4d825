#include "snd/core/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "snd/core/errors.hpp"

namespace snd::core {

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Din: return "din";
    case NodeKind::Win: return "win";
    case NodeKind::TrainEvent: return "train_event";
    case NodeKind::Sink: return "sink";
    case NodeKind::Other: return "other";
  }
  throw ValidationError("unknown node kind");
}

std::string to_string(ArcKind k) {
  switch (k) {
    case ArcKind::TrainMoving: return "train_moving";
    case ArcKind::Waiting: return "waiting";
    case ArcKind::WinSplit: return "win_split";
    case ArcKind::DemandIn: return "demand_in";
    case ArcKind::Other: return "other";
  }
  throw ValidationError("unknown arc kind");
}

NodeKind node_kind_from_string(const std::string& s) {
  if (s == "din") return NodeKind::Din;
  if (s == "win") return NodeKind::Win;
  if (s == "train_event") return NodeKind::TrainEvent;
  if (s == "sink") return NodeKind::Sink;
  if (s == "other") return NodeKind::Other;
  throw ValidationError("unknown node kind '" + s + "'");
}

ArcKind arc_kind_from_string(const std::string& s) {
  if (s == "train_moving") return ArcKind::TrainMoving;
  if (s == "waiting") return ArcKind::Waiting;
  if (s == "win_split") return ArcKind::WinSplit;
  if (s == "demand_in") return ArcKind::DemandIn;
  if (s == "other") return ArcKind::Other;
  throw ValidationError("unknown arc kind '" + s + "'");
}

int SpaceTimeGraph::add_node(NodeKind kind, std::string terminal, int time, std::string label) {
  const int id = static_cast<int>(nodes.size());
  nodes.push_back(GraphNode{id, kind, std::move(terminal), time, std::move(label)});
  return id;
}

int SpaceTimeGraph::add_arc(int tail, int head, ArcKind kind, double capacity_feet) {
  const int id = static_cast<int>(arcs.size());
  arcs.push_back(GraphArc{id, tail, head, kind, capacity_feet});
  return id;
}

void SpaceTimeGraph::validate() const {
  const int n = static_cast<int>(nodes.size());
  for (int i = 0; i < n; ++i) {
    if (nodes[i].id != i)
      throw ValidationError("graph node id " + std::to_string(nodes[i].id) +
                            " does not match its position " + std::to_string(i));
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const GraphArc& a = arcs[i];
    if (a.id != static_cast<int>(i))
      throw ValidationError("graph arc id " + std::to_string(a.id) +
                            " does not match its position " + std::to_string(i));
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw ValidationError("arc " + std::to_string(a.id) + " references a missing node");
    if (a.tail == a.head)
      throw ValidationError("arc " + std::to_string(a.id) + " is a self-loop");
    if (std::isnan(a.capacity_feet) || a.capacity_feet <= 0.0)
      throw ValidationError("arc " + std::to_string(a.id) + " has non-positive capacity");
    if (a.kind == ArcKind::TrainMoving && !std::isfinite(a.capacity_feet))
      throw ValidationError("train-moving arc " + std::to_string(a.id) +
                            " must have finite capacity");
    if (a.kind == ArcKind::WinSplit) {
      if (nodes[a.tail].kind != NodeKind::Win || nodes[a.head].kind != NodeKind::Din)
        throw ValidationError("win-split arc " + std::to_string(a.id) +
                              " must run from a WIN node to a DIN node");
      if (nodes[a.tail].terminal != nodes[a.head].terminal)
        throw ValidationError("win-split arc " + std::to_string(a.id) +
                              " crosses terminals");
    }
  }
  // Kahn's algorithm: the expansion must stay acyclic.
  std::vector<int> indeg(n, 0);
  for (const GraphArc& a : arcs) ++indeg[a.head];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  std::vector<std::vector<int>> out(n);
  for (const GraphArc& a : arcs) out[a.tail].push_back(a.head);
  int seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int h : out[v])
      if (--indeg[h] == 0) stack.push_back(h);
  }
  if (seen != n) throw ValidationError("space-time graph contains a cycle");
}

std::vector<std::string> SpaceTimeGraph::terminals() const {
  std::set<std::string> tags;
  for (const GraphNode& nd : nodes)
    if (nd.kind == NodeKind::Din) tags.insert(nd.terminal);
  return {tags.begin(), tags.end()};
}

std::vector<int> SpaceTimeGraph::din_nodes_of(const std::string& terminal) const {
  std::vector<int> out;
  for (const GraphNode& nd : nodes)
    if (nd.kind == NodeKind::Din && nd.terminal == terminal) out.push_back(nd.id);
  return out;
}

std::optional<int> SpaceTimeGraph::win_node_of(const std::string& terminal) const {
  for (const GraphNode& nd : nodes)
    if (nd.kind == NodeKind::Win && nd.terminal == terminal) return nd.id;
  return std::nullopt;
}

std::vector<int> SpaceTimeGraph::demand_entry_nodes(const std::string& terminal) const {
  if (auto w = win_node_of(terminal)) return {*w};
  return din_nodes_of(terminal);
}

}  // namespace snd::core
