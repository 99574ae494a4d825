#ifndef SND_CORE_INSTANCE_HPP
#define SND_CORE_INSTANCE_HPP

#include <map>
#include <string>
#include <vector>

#include "snd/core/graph.hpp"
#include "snd/core/types.hpp"

namespace snd::core {

// A block is a reusable path through the space-time graph; opening it incurs
// the design cost once per period. Artificial blocks model outsourcing: no
// path, no design cost, always available.
struct Block {
  int id = -1;
  std::vector<int> arcs;  // ordered arc ids; empty exactly for artificial blocks
  double design_cost = 0.0;
  bool artificial = false;
  std::vector<int> admissible;          // commodity ids allowed on this block, sorted
  std::map<int, double> flow_cost;      // commodity id -> cost per container
};

struct CostParams {
  double l40 = 40.0;  // feet of platform consumed by the shorter container family
  double l53 = 53.0;  // feet consumed by the longer family; must exceed l40
  int horizon_weeks = 1;
  int period_days = 7;
};

struct Instance {
  std::string name;
  std::vector<Commodity> commodities;  // ids must equal their position
  SpaceTimeGraph graph;
  std::vector<Block> blocks;           // ids must equal their position
  CostParams params;

  void validate() const;
  std::vector<int> blocks_for(int commodity) const;
};

}  // namespace snd::core

#endif
