#include "snd/pde/pipeline.hpp"

#include <cmath>
#include <limits>

#include "snd/core/errors.hpp"

namespace snd::pde {

namespace {

using nlohmann::ordered_json;

void check_input(const core::Instance& inst, const core::DemandMatrix& m,
                 const char* what) {
  m.validate();
  if (m.commodities != static_cast<int>(inst.commodities.size()))
    throw ValidationError(std::string(what) + " has " + std::to_string(m.commodities) +
                          " commodities but the instance has " +
                          std::to_string(inst.commodities.size()));
  if (m.periods < 1)
    throw ValidationError(std::string(what) + " has no weeks");
}

// Relative gap in percent. A zero base is only acceptable when the value is
// zero too; anything else has no meaningful percentage.
double gap_percent(double value, double base, const char* what) {
  if (base > 0.0) return 100.0 * (value - base) / base;
  if (value == 0.0) return 0.0;
  throw ValidationError(std::string(what) + " is zero; percentage gap is undefined");
}

// Volume promised by a candidate over the horizon, from the pre-rounding
// statistics so the MEAN candidate lands on zero exactly.
double demand_gap(const CandidateResult& c, int weeks, double actual_volume) {
  double promised = 0.0;
  for (double r : c.raw) promised += r;
  promised *= weeks;
  return gap_percent(promised, actual_volume, "total demand");
}

ordered_json candidate_to_json(const CandidateResult& c) {
  ordered_json built = ordered_json::array();
  for (std::size_t b = 0; b < c.plan.built.size(); ++b)
    if (c.plan.built[b]) built.push_back(b);
  return ordered_json{{"mapping", mappings::to_string(c.mapping)},
                      {"periodic_demand", c.y_p},
                      {"raw_statistic", c.raw},
                      {"design_cost_per_week", c.plan.design_cost_per_week},
                      {"flow_cost_total", c.plan.flow_cost_total},
                      {"total_cost", c.plan.total_cost},
                      {"design_status", milp::to_string(c.plan.design_status)},
                      {"built_blocks", std::move(built)}};
}

}  // namespace

PdeResult solve_pde(const core::Instance& inst, const core::DemandMatrix& mapping_input,
                    const core::DemandMatrix& eval_weeks, const milp::SolveOptions& opts) {
  check_input(inst, mapping_input, "mapping input");
  check_input(inst, eval_weeks, "evaluation horizon");

  PdeResult out;
  double best = std::numeric_limits<double>::infinity();
  for (auto m : mappings::all_mappings()) {
    auto est = mappings::map_periodic(mapping_input, m);
    CandidateResult c;
    c.mapping = m;
    c.y_p = est.demand;
    c.raw = est.raw;
    c.plan = plan::solve_plan(inst, c.y_p, eval_weeks, opts);
    if (c.plan.total_cost < best) {
      best = c.plan.total_cost;
      out.selected = static_cast<int>(out.candidates.size());
    }
    out.candidates.push_back(std::move(c));
  }
  return out;
}

double reference_cost(const core::Instance& inst, const core::DemandMatrix& actual,
                      const milp::SolveOptions& opts) {
  check_input(inst, actual, "evaluation horizon");
  double total = 0.0;
  for (int t = 0; t < actual.periods; ++t)
    total += plan::solve_bp(inst, actual.row(t), opts).total_cost;
  return total;
}

Analysis1 analyze_actuals(const core::Instance& inst, const core::DemandMatrix& actual,
                          const milp::SolveOptions& opts) {
  Analysis1 a;
  a.pde = solve_pde(inst, actual, actual, opts);
  a.reference_cost = reference_cost(inst, actual, opts);
  double volume = static_cast<double>(actual.total());
  for (const auto& c : a.pde.candidates) {
    a.gap_percent.push_back(gap_percent(c.plan.total_cost, a.reference_cost,
                                        "reference cost"));
    a.demand_gap_percent.push_back(demand_gap(c, actual.periods, volume));
  }
  return a;
}

Analysis2 analyze_forecast(const core::Instance& inst, const core::DemandMatrix& forecast,
                           const core::DemandMatrix& actual,
                           const milp::SolveOptions& opts) {
  if (forecast.periods != actual.periods)
    throw ValidationError("forecast covers " + std::to_string(forecast.periods) +
                          " week(s) but actuals cover " + std::to_string(actual.periods));

  Analysis2 a;
  a.step1 = solve_pde(inst, forecast, forecast, opts);

  int mean_idx = -1;
  for (std::size_t i = 0; i < a.step1.candidates.size(); ++i)
    if (a.step1.candidates[i].mapping == mappings::PeriodicMapping::Mean)
      mean_idx = static_cast<int>(i);
  double mean_cost = a.step1.candidates.at(mean_idx).plan.total_cost;
  double volume = static_cast<double>(forecast.total());
  for (const auto& c : a.step1.candidates) {
    a.step1_gap_vs_mean.push_back(
        gap_percent(c.plan.total_cost, mean_cost, "MEAN candidate cost"));
    a.step1_demand_gap_percent.push_back(demand_gap(c, forecast.periods, volume));
  }

  const auto& chosen = a.step1.candidates.at(a.step1.selected);
  a.step2_plan = plan::solve_plan(inst, chosen.y_p, actual, opts);
  a.step2_cost = a.step2_plan.total_cost;
  a.reference_cost = reference_cost(inst, actual, opts);
  a.step2_gap_percent = gap_percent(a.step2_cost, a.reference_cost, "reference cost");
  return a;
}

nlohmann::ordered_json analysis1_to_json(const Analysis1& a) {
  ordered_json candidates = ordered_json::array();
  for (std::size_t i = 0; i < a.pde.candidates.size(); ++i) {
    ordered_json c = candidate_to_json(a.pde.candidates[i]);
    c["cost_gap_percent"] = a.gap_percent.at(i);
    c["demand_gap_percent"] = a.demand_gap_percent.at(i);
    candidates.push_back(std::move(c));
  }
  return ordered_json{
      {"analysis", "actuals"},
      {"weeks", a.pde.candidates.empty() ? 0
                                         : static_cast<int>(a.pde.candidates[0].plan.weeks.size())},
      {"reference_cost", a.reference_cost},
      {"selected", mappings::to_string(a.pde.candidates.at(a.pde.selected).mapping)},
      {"candidates", std::move(candidates)}};
}

nlohmann::ordered_json analysis2_to_json(const Analysis2& a) {
  ordered_json candidates = ordered_json::array();
  for (std::size_t i = 0; i < a.step1.candidates.size(); ++i) {
    ordered_json c = candidate_to_json(a.step1.candidates[i]);
    c["cost_gap_vs_mean_percent"] = a.step1_gap_vs_mean.at(i);
    c["demand_gap_percent"] = a.step1_demand_gap_percent.at(i);
    candidates.push_back(std::move(c));
  }
  const auto& chosen = a.step1.candidates.at(a.step1.selected);
  ordered_json built = ordered_json::array();
  for (std::size_t b = 0; b < a.step2_plan.built.size(); ++b)
    if (a.step2_plan.built[b]) built.push_back(b);
  return ordered_json{
      {"analysis", "forecast"},
      {"weeks", static_cast<int>(a.step2_plan.weeks.size())},
      {"selected", mappings::to_string(chosen.mapping)},
      {"step1_candidates", std::move(candidates)},
      {"step2",
       ordered_json{{"periodic_demand", chosen.y_p},
                    {"built_blocks", std::move(built)},
                    {"design_cost_per_week", a.step2_plan.design_cost_per_week},
                    {"flow_cost_total", a.step2_plan.flow_cost_total},
                    {"total_cost", a.step2_cost},
                    {"design_status", milp::to_string(a.step2_plan.design_status)},
                    {"reference_cost", a.reference_cost},
                    {"cost_gap_percent", a.step2_gap_percent}}}};
}

}  // namespace snd::pde
