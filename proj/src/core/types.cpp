#include "snd/core/types.hpp"

#include <cmath>
#include <cstdio>

#include "snd/core/errors.hpp"

namespace snd::core {

std::string to_string(ContainerType t) {
  return t == ContainerType::C40 ? "C40" : "C53";
}

ContainerType container_type_from_string(const std::string& s) {
  if (s == "C40") return ContainerType::C40;
  if (s == "C53") return ContainerType::C53;
  throw ValidationError("unknown container type '" + s + "'");
}

void Commodity::validate() const {
  if (id < 0) throw ValidationError("commodity id must be nonnegative");
  if (origin.empty() || destination.empty())
    throw ValidationError("commodity " + std::to_string(id) + " has an empty terminal name");
  if (origin == destination)
    throw ValidationError("commodity " + std::to_string(id) + " has origin == destination ('" + origin + "')");
}

std::vector<std::int64_t> DemandMatrix::column(int k) const {
  std::vector<std::int64_t> out(periods);
  for (int t = 0; t < periods; ++t) out[t] = at(t, k);
  return out;
}

std::vector<std::int64_t> DemandMatrix::row(int t) const {
  std::vector<std::int64_t> out(commodities);
  for (int k = 0; k < commodities; ++k) out[k] = at(t, k);
  return out;
}

std::int64_t DemandMatrix::total() const {
  std::int64_t s = 0;
  for (auto v : values) s += v;
  return s;
}

void DemandMatrix::validate() const {
  if (periods < 0 || commodities < 0)
    throw ValidationError("demand matrix has negative dimensions");
  if (values.size() != static_cast<std::size_t>(periods) * commodities)
    throw ValidationError("demand matrix storage does not match its dimensions");
  for (auto v : values)
    if (v < 0) throw ValidationError("demand matrix has a negative entry");
}

std::int64_t round_half_up(double x) {
  if (x < 0.0) throw ValidationError("round_half_up expects a nonnegative value");
  return static_cast<std::int64_t>(std::floor(x + 0.5));
}

std::chrono::year_month_day parse_iso_date(const std::string& s) {
  int y = 0, m = 0, d = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3)
    throw ValidationError("malformed date '" + s + "', expected YYYY-MM-DD");
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) throw ValidationError("invalid calendar date '" + s + "'");
  return ymd;
}

std::string format_iso_date(const std::chrono::year_month_day& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

}  // namespace snd::core
