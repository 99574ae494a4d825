#ifndef SND_FORECAST_METRICS_HPP
#define SND_FORECAST_METRICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snd/core/types.hpp"

namespace snd::forecast {

// 100 * sum|a - f| / sum a; undefined (nullopt) when the actuals sum to zero.
std::optional<double> wape(const std::vector<std::int64_t>& actual,
                           const std::vector<std::int64_t>& predicted);

// Root mean squared error over the paired entries.
double rmse(const std::vector<std::int64_t>& actual,
            const std::vector<std::int64_t>& predicted);

struct MatrixAccuracy {
  std::vector<std::optional<double>> wape_per_commodity;
  std::vector<double> rmse_per_commodity;
  std::optional<double> overall_wape;
  double overall_rmse = 0.0;
  std::vector<std::string> notes;  // commodities excluded from WAPE
};

MatrixAccuracy accuracy(const core::DemandMatrix& actual,
                        const core::DemandMatrix& predicted);

// Pearson correlation between x[i] and y[i + lag] over the overlap, with a
// two-sided t-test at the 95% level.
struct LaggedCorrelation {
  int lag = 0;
  int pairs = 0;
  double r = 0.0;
  double t_stat = 0.0;
  double p_value = 1.0;
  bool significant = false;
};

LaggedCorrelation lagged_pearson(const std::vector<double>& x,
                                 const std::vector<double>& y, int lag);

}  // namespace snd::forecast

#endif
