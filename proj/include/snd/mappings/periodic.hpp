#ifndef SND_MAPPINGS_PERIODIC_HPP
#define SND_MAPPINGS_PERIODIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "snd/core/types.hpp"

namespace snd::mappings {

// Ways to compress a weekly demand series into one periodic (per-week) number.
enum class PeriodicMapping { Max, Mean, Q2, Q3 };

// Candidate order is fixed; ties between candidates resolve to the earlier one.
std::vector<PeriodicMapping> all_mappings();
std::string to_string(PeriodicMapping m);
PeriodicMapping mapping_from_string(const std::string& s);

// Pre-rounding statistic of one weekly series. Quantiles interpolate linearly
// between order statistics at position (n-1)*q.
double periodic_statistic(const std::vector<std::int64_t>& series, PeriodicMapping m);

struct PeriodicEstimate {
  PeriodicMapping mapping{};
  std::vector<std::int64_t> demand;  // rounded half-up, per commodity
  std::vector<double> raw;           // pre-rounding statistic, per commodity
};

PeriodicEstimate map_periodic(const core::DemandMatrix& weekly, PeriodicMapping m);
std::vector<PeriodicEstimate> build_candidate_set(const core::DemandMatrix& weekly);

}  // namespace snd::mappings

#endif
