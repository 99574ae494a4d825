#ifndef SND_CORE_SYNTHETIC_HPP
#define SND_CORE_SYNTHETIC_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "snd/core/instance.hpp"
#include "snd/core/types.hpp"

namespace snd::core {

// Deterministic generator: same config, same bytes out. Terminals sit on a
// ring; each commodity follows the forward ring route from its origin to its
// destination and gets one block per weekly departure slot plus one
// artificial (outsourcing) block per origin/destination lane.
struct SyntheticConfig {
  std::uint64_t seed = 1;
  int terminals = 3;            // ring size, >= 2
  int commodities = 4;          // K
  int commodities_per_od = 2;   // share lanes pairwise (alternating families) or not
  int trains_per_week = 2;      // departure slots usable by blocks, per corridor
  int history_weeks = 24;
  int horizon_weeks = 3;

  double base_weekly_demand = 10.0;  // approximate weekly mean per commodity
  double seasonal_amplitude = 0.3;
  double trend = 0.0;                // relative drift over the whole span
  double noise_level = 0.15;         // relative daily noise
  double spike_probability = 0.01;
  double spike_multiplier = 3.0;

  double capacity_tightness = 0.9;   // train feet vs. mean weekly corridor load
  double cost_scale = 1.0;
};

struct SyntheticOutput {
  Instance instance;
  std::vector<DailyDemandRecord> history_daily;
  std::vector<DailyDemandRecord> horizon_daily;
  DemandMatrix history;  // history_weeks x K
  DemandMatrix horizon;  // horizon_weeks x K, the actuals over the plan horizon
  std::chrono::year_month_day history_start{};
  std::chrono::year_month_day horizon_start{};
};

SyntheticOutput generate_synthetic(const SyntheticConfig& cfg);

}  // namespace snd::core

#endif
