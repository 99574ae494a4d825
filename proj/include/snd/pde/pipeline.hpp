#ifndef SND_PDE_PIPELINE_HPP
#define SND_PDE_PIPELINE_HPP

#include <json.hpp>

#include <vector>

#include "snd/core/instance.hpp"
#include "snd/mappings/periodic.hpp"
#include "snd/plan/solve.hpp"

namespace snd::pde {

struct CandidateResult {
  mappings::PeriodicMapping mapping{};
  std::vector<std::int64_t> y_p;  // the periodic demand this mapping proposes
  std::vector<double> raw;        // its pre-rounding statistics
  plan::TacticalPlan plan;        // design sized on y_p, flows over eval weeks
};

struct PdeResult {
  std::vector<CandidateResult> candidates;  // MAX, MEAN, Q2, Q3 in that order
  int selected = -1;                        // cheapest total; ties go earlier
};

// Derive each candidate's periodic demand from `mapping_input`, then run the
// sequential design-and-flows pipeline against `eval_weeks`.
PdeResult solve_pde(const core::Instance& inst, const core::DemandMatrix& mapping_input,
                    const core::DemandMatrix& eval_weeks,
                    const milp::SolveOptions& opts = {});

// Candidates on actual weekly demand, scored against the week-by-week
// re-design reference: the sum over weeks of a fresh one-week optimum, a
// floor no fixed design can beat.
struct Analysis1 {
  PdeResult pde;
  double reference_cost = 0.0;
  std::vector<double> gap_percent;         // (cost - reference) / reference
  std::vector<double> demand_gap_percent;  // raw candidate volume vs. actual volume
};

Analysis1 analyze_actuals(const core::Instance& inst, const core::DemandMatrix& actual,
                          const milp::SolveOptions& opts = {});

// Step 1 selects a mapping using forecast weeks only (gaps quoted against the
// MEAN candidate); step 2 freezes that design and meets the actual weeks,
// scored against the same reference as above.
struct Analysis2 {
  PdeResult step1;
  std::vector<double> step1_gap_vs_mean;
  std::vector<double> step1_demand_gap_percent;
  plan::TacticalPlan step2_plan;
  double step2_cost = 0.0;
  double reference_cost = 0.0;
  double step2_gap_percent = 0.0;
};

Analysis2 analyze_forecast(const core::Instance& inst,
                           const core::DemandMatrix& forecast,
                           const core::DemandMatrix& actual,
                           const milp::SolveOptions& opts = {});

nlohmann::ordered_json analysis1_to_json(const Analysis1& a);
nlohmann::ordered_json analysis2_to_json(const Analysis2& a);

double reference_cost(const core::Instance& inst, const core::DemandMatrix& actual,
                      const milp::SolveOptions& opts = {});

}  // namespace snd::pde

#endif
