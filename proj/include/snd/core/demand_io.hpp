#ifndef SND_CORE_DEMAND_IO_HPP
#define SND_CORE_DEMAND_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "snd/core/types.hpp"

namespace snd::core {

// Daily demand CSV. Header is either
//   date,commodity_id,count
// or
//   date,commodity_id,count,feet
// In the 4-column form `count` counts boxes of the given length class
// (20/40/45/48/53 feet) and a 20-foot box normalizes to half a container of
// the shorter family, so loaded counts land on the 0.5 grid. In the 3-column
// form `count` is already normalized and must itself sit on that grid.
std::vector<DailyDemandRecord> read_daily_demand(std::istream& in,
                                                 const std::string& source_name);
std::vector<DailyDemandRecord> load_daily_demand(const std::string& path);

void write_daily_demand(std::ostream& out, const std::vector<DailyDemandRecord>& records);
void save_daily_demand(const std::string& path, const std::vector<DailyDemandRecord>& records);

}  // namespace snd::core

#endif
