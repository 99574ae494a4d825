#ifndef SND_CORE_WIN_TRANSFORM_HPP
#define SND_CORE_WIN_TRANSFORM_HPP

#include <string>
#include <vector>

#include "snd/core/graph.hpp"

namespace snd::core {

struct WinTransformResult {
  int nodes_added = 0;
  int arcs_added = 0;
};

// Adds one WIN node per terminal plus a zero-cost split arc from it to each
// of the terminal's DIN nodes. Purely additive: existing nodes and arcs are
// untouched, so demand formerly anchored at the DINs re-anchors at the WIN
// through demand_entry_nodes(). Throws if a terminal already has a WIN node
// or has no DIN node.
WinTransformResult apply_win_transform(SpaceTimeGraph& graph,
                                       const std::vector<std::string>& terminals);
WinTransformResult apply_win_transform(SpaceTimeGraph& graph);  // all DIN terminals

// Inverse: drops every WIN node and all arcs touching one, then re-packs ids.
// Applying it right after the transform restores the input graph exactly.
void remove_win_nodes(SpaceTimeGraph& graph);

}  // namespace snd::core

#endif
