#include "snd/mappings/periodic.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "snd/core/errors.hpp"

namespace snd::mappings {

std::vector<PeriodicMapping> all_mappings() {
  return {PeriodicMapping::Max, PeriodicMapping::Mean, PeriodicMapping::Q2,
          PeriodicMapping::Q3};
}

std::string to_string(PeriodicMapping m) {
  switch (m) {
    case PeriodicMapping::Max: return "MAX";
    case PeriodicMapping::Mean: return "MEAN";
    case PeriodicMapping::Q2: return "Q2";
    case PeriodicMapping::Q3: return "Q3";
  }
  throw ValidationError("unknown mapping");
}

PeriodicMapping mapping_from_string(const std::string& s) {
  std::string u(s.size(), '\0');
  std::transform(s.begin(), s.end(), u.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (u == "MAX") return PeriodicMapping::Max;
  if (u == "MEAN") return PeriodicMapping::Mean;
  if (u == "Q2") return PeriodicMapping::Q2;
  if (u == "Q3") return PeriodicMapping::Q3;
  throw ValidationError("unknown mapping '" + s + "', expected MAX, MEAN, Q2 or Q3");
}

namespace {

double quantile(std::vector<std::int64_t> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * (static_cast<double>(v.size()) - 1.0);
  const auto lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= v.size()) return static_cast<double>(v.back());
  return static_cast<double>(v[lo]) + frac * static_cast<double>(v[lo + 1] - v[lo]);
}

}  // namespace

double periodic_statistic(const std::vector<std::int64_t>& series, PeriodicMapping m) {
  if (series.empty()) throw ValidationError("cannot map an empty weekly series");
  switch (m) {
    case PeriodicMapping::Max:
      return static_cast<double>(*std::max_element(series.begin(), series.end()));
    case PeriodicMapping::Mean:
      return std::accumulate(series.begin(), series.end(), 0.0) /
             static_cast<double>(series.size());
    case PeriodicMapping::Q2:
      return quantile(series, 0.5);
    case PeriodicMapping::Q3:
      return quantile(series, 0.75);
  }
  throw ValidationError("unknown mapping");
}

PeriodicEstimate map_periodic(const core::DemandMatrix& weekly, PeriodicMapping m) {
  weekly.validate();
  if (weekly.periods < 1)
    throw ValidationError("need at least one week to derive periodic demand");
  PeriodicEstimate est;
  est.mapping = m;
  est.raw.reserve(weekly.commodities);
  est.demand.reserve(weekly.commodities);
  for (int k = 0; k < weekly.commodities; ++k) {
    const double s = periodic_statistic(weekly.column(k), m);
    est.raw.push_back(s);
    est.demand.push_back(core::round_half_up(s));
  }
  return est;
}

std::vector<PeriodicEstimate> build_candidate_set(const core::DemandMatrix& weekly) {
  std::vector<PeriodicEstimate> out;
  for (PeriodicMapping m : all_mappings()) out.push_back(map_periodic(weekly, m));
  return out;
}

}  // namespace snd::mappings
