#include "snd/plan/solve.hpp"

#include <algorithm>
#include <cmath>

#include "snd/core/errors.hpp"

namespace snd::plan {

namespace {

// All demand rides the artificial blocks: always feasible, and a cheap
// incumbent that lets branch and bound prune from the start.
std::vector<double> outsourcing_start(const core::Instance& inst,
                                      const std::vector<std::int64_t>& y,
                                      const BlockModel& bm) {
  std::vector<double> x(bm.model.vars.size(), 0.0);
  for (const core::Block& b : inst.blocks)
    if (b.artificial && bm.index.z[b.id] >= 0) x[bm.index.z[b.id]] = 1.0;
  std::vector<char> routed(y.size(), 0);
  for (const core::Block& b : inst.blocks) {
    if (!b.artificial) continue;
    for (int k : b.admissible) {
      if (routed[k]) continue;
      auto it = bm.index.x[b.id].find(k);
      if (it == bm.index.x[b.id].end()) continue;
      x[it->second] = static_cast<double>(y[k]);
      routed[k] = 1;
    }
  }
  return x;
}

WeekFlows extract_week(const core::Instance& inst, const BlockModel& bm,
                       const std::vector<double>& values) {
  WeekFlows wf;
  wf.flows.resize(inst.blocks.size());
  wf.platforms.resize(inst.blocks.size());
  for (const core::Block& b : inst.blocks) {
    for (auto [k, var] : bm.index.x[b.id]) {
      const std::int64_t n = std::llround(values[var]);
      if (n != 0) wf.flows[b.id][k] = n;
    }
    if (!b.artificial && bm.index.v40[b.id] >= 0) {
      std::int64_t n40 = 0, n53 = 0;
      for (auto [k, n] : wf.flows[b.id])
        (inst.commodities[k].type == core::ContainerType::C53 ? n53 : n40) += n;
      wf.platforms[b.id] = platform_requirement(n40, n53);
    }
    for (auto [k, n] : wf.flows[b.id]) wf.flow_cost += b.flow_cost.at(k) * n;
  }

  // The snapped platforms must still fit every train. They do by
  // construction; this guards the extraction itself.
  for (const core::GraphArc& a : inst.graph.arcs) {
    if (a.kind != core::ArcKind::TrainMoving) continue;
    double feet = 0.0;
    for (const core::Block& b : inst.blocks) {
      if (b.artificial) continue;
      if (std::find(b.arcs.begin(), b.arcs.end(), a.id) == b.arcs.end()) continue;
      feet += inst.params.l40 * wf.platforms[b.id].v40 +
              inst.params.l53 * wf.platforms[b.id].v53;
    }
    if (feet > a.capacity_feet + 1e-6)
      throw SolverError("snapped platforms exceed train arc " + std::to_string(a.id));
  }
  return wf;
}

}  // namespace

double design_cost_of(const core::Instance& inst, const std::vector<char>& built) {
  if (built.size() != inst.blocks.size())
    throw ValidationError("design vector length does not match the block count");
  double d = 0.0;
  for (const core::Block& b : inst.blocks)
    if (!b.artificial && built[b.id]) d += b.design_cost;
  return d;
}

BpSolution solve_bp(const core::Instance& inst, const std::vector<std::int64_t>& y_p,
                    const milp::SolveOptions& opts) {
  const BlockModel bm = build_bp(inst, y_p);
  const std::vector<double> start = outsourcing_start(inst, y_p, bm);
  milp::SolveOptions local = opts;
  if (!local.warm_start) local.warm_start = &start;
  const milp::MilpSolution sol = milp::solve_milp(bm.model, local);
  if (!sol.has_solution)
    throw SolverError("design model ended " + milp::to_string(sol.status) +
                      " without a solution; artificial blocks should prevent this");

  BpSolution out;
  out.status = sol.status;
  out.bound = sol.bound;
  out.nodes = sol.nodes_explored;
  out.built.assign(inst.blocks.size(), 0);
  for (const core::Block& b : inst.blocks)
    out.built[b.id] =
        b.artificial || std::llround(sol.values[bm.index.z[b.id]]) == 1 ? 1 : 0;
  out.week = extract_week(inst, bm, sol.values);
  out.design_cost = design_cost_of(inst, out.built);
  out.total_cost = out.design_cost + out.week.flow_cost;
  if (std::abs(out.total_cost - sol.objective) >
      1e-6 * std::max(1.0, std::abs(sol.objective)))
    throw SolverError("extracted design cost disagrees with the solver objective");
  return out;
}

TacticalPlan solve_plan(const core::Instance& inst, const std::vector<std::int64_t>& y_p,
                        const core::DemandMatrix& weekly, const milp::SolveOptions& opts) {
  weekly.validate();
  if (weekly.commodities != static_cast<int>(inst.commodities.size()))
    throw ValidationError("weekly demand matrix does not match the commodity count");
  if (weekly.periods < 1) throw ValidationError("plan horizon has no weeks");

  const BpSolution bp = solve_bp(inst, y_p, opts);

  TacticalPlan plan;
  plan.periodic_demand = y_p;
  plan.built = bp.built;
  plan.design_cost_per_week = bp.design_cost;
  plan.design_status = bp.status;
  plan.design_bound = bp.bound;
  plan.nodes = bp.nodes;

  for (int t = 0; t < weekly.periods; ++t) {
    const std::vector<std::int64_t> y_t = weekly.row(t);
    const BlockModel wm = build_wbp(inst, y_t, plan.built);
    const std::vector<double> start = outsourcing_start(inst, y_t, wm);
    milp::SolveOptions local = opts;
    if (!local.warm_start) local.warm_start = &start;
    const milp::MilpSolution sol = milp::solve_milp(wm.model, local);
    if (!sol.has_solution)
      throw SolverError("weekly flow model for week " + std::to_string(t) +
                        " ended " + milp::to_string(sol.status));
    plan.weeks.push_back(extract_week(inst, wm, sol.values));
    plan.nodes += sol.nodes_explored;
  }

  for (const WeekFlows& w : plan.weeks) plan.flow_cost_total += w.flow_cost;
  plan.total_cost =
      plan.design_cost_per_week * weekly.periods + plan.flow_cost_total;
  return plan;
}

}  // namespace snd::plan
