#ifndef SND_CORE_GRAPH_HPP
#define SND_CORE_GRAPH_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace snd::core {

enum class NodeKind { Din, Win, TrainEvent, Sink, Other };
enum class ArcKind { TrainMoving, Waiting, WinSplit, DemandIn, Other };

std::string to_string(NodeKind k);
std::string to_string(ArcKind k);
NodeKind node_kind_from_string(const std::string& s);
ArcKind arc_kind_from_string(const std::string& s);

struct GraphNode {
  int id = -1;
  NodeKind kind = NodeKind::Other;
  std::string terminal;  // owning terminal tag; may be empty for Other nodes
  int time = -1;         // slot index within the cycle, -1 when untimed
  std::string label;
};

struct GraphArc {
  int id = -1;
  int tail = -1;
  int head = -1;
  ArcKind kind = ArcKind::Other;
  // feet of train length available; finite and positive on train-moving arcs
  double capacity_feet = std::numeric_limits<double>::infinity();
};

// Cyclic-schedule expansion over one planning period, stored acyclic (slots
// run forward, no wrap arcs).
struct SpaceTimeGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphArc> arcs;

  int add_node(NodeKind kind, std::string terminal, int time = -1, std::string label = "");
  int add_arc(int tail, int head, ArcKind kind,
              double capacity_feet = std::numeric_limits<double>::infinity());

  void validate() const;

  std::vector<std::string> terminals() const;  // sorted unique tags over DIN nodes
  std::vector<int> din_nodes_of(const std::string& terminal) const;
  std::optional<int> win_node_of(const std::string& terminal) const;
  // Demand anchoring: the WIN node once the transform ran, DIN nodes before.
  std::vector<int> demand_entry_nodes(const std::string& terminal) const;
};

}  // namespace snd::core

#endif
