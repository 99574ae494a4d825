#include "snd/core/aggregate.hpp"

#include <algorithm>
#include <cmath>

#include "snd/core/errors.hpp"

namespace snd::core {

PeriodAggregate aggregate_to_periods(const std::vector<DailyDemandRecord>& records,
                                     int num_commodities) {
  using namespace std::chrono;
  if (records.empty()) throw ValidationError("no demand records to aggregate");
  if (num_commodities < 1) throw ValidationError("need at least one commodity");

  sys_days lo = sys_days{records.front().date};
  sys_days hi = lo;
  for (const DailyDemandRecord& r : records) {
    if (!r.date.ok()) throw ValidationError("record carries an invalid date");
    if (r.commodity_id < 0 || r.commodity_id >= num_commodities)
      throw ValidationError("record references missing commodity " +
                            std::to_string(r.commodity_id));
    if (r.count < 0.0) throw ValidationError("record carries a negative count");
    const sys_days d{r.date};
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }

  // Advance to the first Monday, retreat to the last Sunday.
  sys_days first = lo;
  while (weekday{first} != Monday) first += days{1};
  sys_days last = hi;
  while (weekday{last} != Sunday) last -= days{1};
  const auto span = (last - first).count() + 1;
  if (span < 7)
    throw ValidationError("records do not cover a single complete Monday-to-Sunday week");
  const int periods = static_cast<int>(span / 7);

  std::vector<double> sums(static_cast<std::size_t>(periods) * num_commodities, 0.0);
  std::vector<char> day_has_record(static_cast<std::size_t>(span), 0);
  std::size_t dropped = 0;
  for (const DailyDemandRecord& r : records) {
    const auto offset = (sys_days{r.date} - first).count();
    if (offset < 0 || offset >= span) {
      ++dropped;
      continue;
    }
    day_has_record[static_cast<std::size_t>(offset)] = 1;
    const int week = static_cast<int>(offset / 7);
    sums[static_cast<std::size_t>(week) * num_commodities + r.commodity_id] += r.count;
  }

  PeriodAggregate out;
  out.first_day = year_month_day{first};
  if (dropped > 0)
    out.warnings.push_back("dropped " + std::to_string(dropped) +
                           " record(s) falling in partial leading/trailing weeks");
  std::vector<std::string> gap_dates;
  long gaps = 0;
  for (long i = 0; i < span; ++i) {
    if (day_has_record[static_cast<std::size_t>(i)]) continue;
    ++gaps;
    if (gap_dates.size() < 5)
      gap_dates.push_back(format_iso_date(year_month_day{first + days{i}}));
  }
  if (gaps > 0) {
    std::string w = std::to_string(gaps) +
                    " day(s) inside the aggregated span have no records and count as zero"
                    " (first: ";
    for (std::size_t i = 0; i < gap_dates.size(); ++i) {
      if (i) w += ", ";
      w += gap_dates[i];
    }
    w += ")";
    out.warnings.push_back(w);
  }

  out.matrix.periods = periods;
  out.matrix.commodities = num_commodities;
  out.matrix.values.resize(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i)
    out.matrix.values[i] = round_half_up(sums[i]);
  out.matrix.validate();
  return out;
}

}  // namespace snd::core
