#include "snd/forecast/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <cmath>

#include "snd/core/errors.hpp"

namespace snd::forecast {

std::optional<double> wape(const std::vector<std::int64_t>& actual,
                           const std::vector<std::int64_t>& predicted) {
  if (actual.size() != predicted.size() || actual.empty())
    throw ValidationError("WAPE needs two equally sized, non-empty series");
  std::int64_t denom = 0, num = 0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    denom += actual[i];
    num += std::llabs(actual[i] - predicted[i]);
  }
  if (denom == 0) return std::nullopt;
  return 100.0 * static_cast<double>(num) / static_cast<double>(denom);
}

double rmse(const std::vector<std::int64_t>& actual,
            const std::vector<std::int64_t>& predicted) {
  if (actual.size() != predicted.size() || actual.empty())
    throw ValidationError("RMSE needs two equally sized, non-empty series");
  double sq = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const double d = static_cast<double>(actual[i] - predicted[i]);
    sq += d * d;
  }
  return std::sqrt(sq / static_cast<double>(actual.size()));
}

MatrixAccuracy accuracy(const core::DemandMatrix& actual,
                        const core::DemandMatrix& predicted) {
  if (actual.periods != predicted.periods || actual.commodities != predicted.commodities)
    throw ValidationError("actual and predicted matrices differ in shape");
  if (actual.periods < 1) throw ValidationError("accuracy needs at least one period");

  MatrixAccuracy acc;
  std::int64_t denom = 0, num = 0;
  double sq = 0.0;
  for (int k = 0; k < actual.commodities; ++k) {
    const auto a = actual.column(k);
    const auto p = predicted.column(k);
    const auto w = wape(a, p);
    acc.wape_per_commodity.push_back(w);
    acc.rmse_per_commodity.push_back(rmse(a, p));
    if (!w)
      acc.notes.push_back("commodity " + std::to_string(k) +
                          ": zero actual demand, WAPE undefined, excluded");
    for (int t = 0; t < actual.periods; ++t) {
      denom += a[t];
      num += std::llabs(a[t] - p[t]);
      const double d = static_cast<double>(a[t] - p[t]);
      sq += d * d;
    }
  }
  if (denom > 0)
    acc.overall_wape = 100.0 * static_cast<double>(num) / static_cast<double>(denom);
  acc.overall_rmse =
      std::sqrt(sq / (static_cast<double>(actual.periods) * actual.commodities));
  return acc;
}

LaggedCorrelation lagged_pearson(const std::vector<double>& x,
                                 const std::vector<double>& y, int lag) {
  LaggedCorrelation out;
  out.lag = lag;
  // Pair x[i] with y[i + lag]; negative lags shift the other way.
  const int nx = static_cast<int>(x.size());
  const int ny = static_cast<int>(y.size());
  const int lo = std::max(0, -lag);
  const int hi = std::min(nx, ny - lag);
  const int m = hi - lo;
  if (m < 3)
    throw ValidationError("lag " + std::to_string(lag) +
                          " leaves fewer than three overlapping pairs");
  out.pairs = m;

  double mx = 0.0, my = 0.0;
  for (int i = lo; i < hi; ++i) {
    mx += x[i];
    my += y[i + lag];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (int i = lo; i < hi; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i + lag] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw ValidationError("a constant series has no defined correlation");
  out.r = sxy / std::sqrt(sxx * syy);

  const double r2 = out.r * out.r;
  if (r2 >= 1.0) {
    // Perfect correlation: the t statistic diverges.
    out.t_stat = std::numeric_limits<double>::infinity();
    out.p_value = 0.0;
    out.significant = true;
    return out;
  }
  out.t_stat = out.r * std::sqrt((m - 2) / (1.0 - r2));
  const boost::math::students_t dist(m - 2);
  out.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(out.t_stat)));
  out.significant = out.p_value < 0.05;
  return out;
}

}  // namespace snd::forecast
