#ifndef SND_FORECAST_FORECAST_HPP
#define SND_FORECAST_FORECAST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "snd/core/types.hpp"

namespace snd::forecast {

// Autoregression on the mean-centered series, fit by least squares without an
// intercept (the mean absorbs it).
struct ArModel {
  int order = 0;                // 0 means: constant forecast at the mean
  double mean = 0.0;
  std::vector<double> coef;     // phi_1..phi_p, most recent lag first
  double sigma2 = 0.0;          // residual variance of the fit
  double aic = 0.0;
};

// Least-squares fit of a fixed order. Requires series.size() > order.
ArModel fit_ar(const std::vector<double>& series, int order);

// Order picked by AIC over 1..max_order; orders with fewer than order + 10
// observations are not considered. Throws when even order 1 lacks history.
ArModel fit_ar_auto(const std::vector<double>& series, int max_order = 10);

// Multi-step recursion. Internal state stays raw (no clamping, no rounding);
// only emitted values are clamped at zero and rounded half-up.
std::vector<std::int64_t> forecast_ar(const ArModel& model,
                                      const std::vector<double>& history, int horizon);

// Mean of the history carried forward; the fallback when history is short.
std::vector<std::int64_t> forecast_constant(const std::vector<double>& history,
                                            int horizon);

struct ForecastResult {
  core::DemandMatrix matrix;        // horizon x K
  std::vector<int> order;           // chosen AR order per commodity, 0 = constant
  std::vector<std::string> notes;   // fallback warnings
};

// Column-by-column driver over a weekly history matrix.
ForecastResult forecast_matrix(const core::DemandMatrix& history, int horizon,
                               int max_order = 10);

}  // namespace snd::forecast

#endif
