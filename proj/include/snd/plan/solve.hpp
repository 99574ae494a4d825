#ifndef SND_PLAN_SOLVE_HPP
#define SND_PLAN_SOLVE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "snd/core/instance.hpp"
#include "snd/core/types.hpp"
#include "snd/plan/builders.hpp"

namespace snd::plan {

// Flows of one week, block by block, with the snapped platform counts.
struct WeekFlows {
  std::vector<std::map<int, std::int64_t>> flows;  // per block: commodity -> containers
  std::vector<PlatformCount> platforms;            // per block; zeros when idle
  double flow_cost = 0.0;
};

struct BpSolution {
  std::vector<char> built;  // per block; artificial blocks count as built
  WeekFlows week;
  double design_cost = 0.0;
  double total_cost = 0.0;  // design + one period of flow
  milp::SolveStatus status = milp::SolveStatus::Optimal;
  double bound = 0.0;
  long nodes = 0;
};

// Design + flows for one periodic demand vector. Platform counts in the
// result are snapped to the feet-minimal closed form, which never changes
// the objective and keeps every train within its feet budget.
BpSolution solve_bp(const core::Instance& inst, const std::vector<std::int64_t>& y_p,
                    const milp::SolveOptions& opts = {});

struct TacticalPlan {
  std::vector<std::int64_t> periodic_demand;
  std::vector<char> built;
  double design_cost_per_week = 0.0;
  std::vector<WeekFlows> weeks;
  double flow_cost_total = 0.0;
  double total_cost = 0.0;  // horizon weeks * design + all weekly flows
  milp::SolveStatus design_status = milp::SolveStatus::Optimal;
  double design_bound = 0.0;
  long nodes = 0;
};

// The sequential pipeline: size the design on the periodic demand, then
// re-optimize each week's flows against that frozen design. The design cost
// recurs every week of the horizon.
TacticalPlan solve_plan(const core::Instance& inst, const std::vector<std::int64_t>& y_p,
                        const core::DemandMatrix& weekly,
                        const milp::SolveOptions& opts = {});

double design_cost_of(const core::Instance& inst, const std::vector<char>& built);

}  // namespace snd::plan

#endif
