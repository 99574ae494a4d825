#ifndef SND_CORE_TYPES_HPP
#define SND_CORE_TYPES_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace snd::core {

// Two container families. The 40-ft family (20/40-ft boxes) and the 53-ft
// family (45/48/53-ft boxes); a double-stack platform carries two boxes, and
// a 40-ft box may ride in a 53-ft well but not the other way around.
enum class ContainerType { C40, C53 };

std::string to_string(ContainerType t);
ContainerType container_type_from_string(const std::string& s);

// An origin/destination/type triple. Demand is expressed in containers of
// this type between the two terminals.
struct Commodity {
  int id = -1;
  std::string origin;
  std::string destination;
  ContainerType type = ContainerType::C40;

  void validate() const;  // throws ValidationError on origin == destination etc.
};

// One demand observation. `count` is containers; 20-ft boxes enter as half
// containers, so the only fractions that can appear are halves.
struct DailyDemandRecord {
  std::chrono::year_month_day date{};
  int commodity_id = -1;
  double count = 0.0;
};

// Row-major T x K matrix of integer container counts. Rows are periods
// (weeks), columns are commodities in instance order.
struct DemandMatrix {
  int periods = 0;
  int commodities = 0;
  std::vector<std::int64_t> values;  // periods * commodities, row-major

  DemandMatrix() = default;
  DemandMatrix(int t, int k) : periods(t), commodities(k), values(static_cast<std::size_t>(t) * k, 0) {}

  std::int64_t& at(int t, int k) { return values[static_cast<std::size_t>(t) * commodities + k]; }
  std::int64_t at(int t, int k) const { return values[static_cast<std::size_t>(t) * commodities + k]; }

  std::vector<std::int64_t> column(int k) const;
  std::vector<std::int64_t> row(int t) const;
  std::int64_t total() const;
  void validate() const;  // nonnegative entries, size agreement
};

// Round half up to the nearest integer; defined for nonnegative inputs.
std::int64_t round_half_up(double x);

// ISO-8601 calendar helpers.
std::chrono::year_month_day parse_iso_date(const std::string& s);
std::string format_iso_date(const std::chrono::year_month_day& d);

}  // namespace snd::core

#endif
