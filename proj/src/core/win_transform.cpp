#include "snd/core/win_transform.hpp"

#include <algorithm>

#include "snd/core/errors.hpp"

namespace snd::core {

WinTransformResult apply_win_transform(SpaceTimeGraph& graph,
                                       const std::vector<std::string>& terminals) {
  WinTransformResult res;
  for (const std::string& t : terminals) {
    if (graph.win_node_of(t))
      throw ValidationError("terminal '" + t + "' already has a WIN node");
    const std::vector<int> dins = graph.din_nodes_of(t);
    if (dins.empty())
      throw ValidationError("terminal '" + t + "' has no DIN node to split into");
    const int win = graph.add_node(NodeKind::Win, t, -1, "WIN_" + t);
    ++res.nodes_added;
    for (int d : dins) {
      graph.add_arc(win, d, ArcKind::WinSplit);
      ++res.arcs_added;
    }
  }
  return res;
}

WinTransformResult apply_win_transform(SpaceTimeGraph& graph) {
  return apply_win_transform(graph, graph.terminals());
}

void remove_win_nodes(SpaceTimeGraph& graph) {
  const int n = static_cast<int>(graph.nodes.size());
  std::vector<char> drop(n, 0);
  for (const GraphNode& nd : graph.nodes)
    if (nd.kind == NodeKind::Win) drop[nd.id] = 1;

  std::vector<int> remap(n, -1);
  std::vector<GraphNode> nodes;
  nodes.reserve(n);
  for (const GraphNode& nd : graph.nodes) {
    if (drop[nd.id]) continue;
    remap[nd.id] = static_cast<int>(nodes.size());
    nodes.push_back(nd);
    nodes.back().id = remap[nd.id];
  }

  std::vector<GraphArc> arcs;
  arcs.reserve(graph.arcs.size());
  for (const GraphArc& a : graph.arcs) {
    if (drop[a.tail] || drop[a.head]) continue;
    GraphArc keep = a;
    keep.id = static_cast<int>(arcs.size());
    keep.tail = remap[a.tail];
    keep.head = remap[a.head];
    arcs.push_back(keep);
  }

  graph.nodes = std::move(nodes);
  graph.arcs = std::move(arcs);
}

}  // namespace snd::core
