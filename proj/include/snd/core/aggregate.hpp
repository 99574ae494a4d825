#ifndef SND_CORE_AGGREGATE_HPP
#define SND_CORE_AGGREGATE_HPP

#include <chrono>
#include <string>
#include <vector>

#include "snd/core/types.hpp"

namespace snd::core {

struct PeriodAggregate {
  DemandMatrix matrix;  // one row per complete Monday-to-Sunday week
  std::chrono::year_month_day first_day{};  // the Monday opening row 0
  std::vector<std::string> warnings;
};

// Buckets daily records into complete Monday-aligned weeks. Partial leading
// and trailing weeks are dropped; days inside the span with no records count
// as zero and raise a warning. Half counts round half-up at the weekly
// boundary.
PeriodAggregate aggregate_to_periods(const std::vector<DailyDemandRecord>& records,
                                     int num_commodities);

}  // namespace snd::core

#endif
