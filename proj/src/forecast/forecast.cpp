#include "snd/forecast/forecast.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numeric>

#include "snd/core/errors.hpp"

namespace snd::forecast {

namespace {

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

ArModel fit_ar(const std::vector<double>& series, int order) {
  const int n = static_cast<int>(series.size());
  if (order < 1) throw ValidationError("autoregression order must be positive");
  if (n <= order)
    throw ValidationError("series of length " + std::to_string(n) +
                          " cannot support order " + std::to_string(order));

  ArModel m;
  m.order = order;
  m.mean = mean_of(series);
  std::vector<double> c(series.size());
  double energy = 0.0;
  for (int i = 0; i < n; ++i) {
    c[i] = series[i] - m.mean;
    energy += c[i] * c[i];
  }

  const int rows = n - order;
  Eigen::MatrixXd x(rows, order);
  Eigen::VectorXd y(rows);
  for (int t = 0; t < rows; ++t) {
    y(t) = c[t + order];
    for (int j = 0; j < order; ++j) x(t, j) = c[t + order - 1 - j];
  }

  const Eigen::MatrixXd xtx = x.transpose() * x;
  const Eigen::VectorXd xty = x.transpose() * y;
  Eigen::VectorXd phi = xtx.ldlt().solve(xty);
  const bool bad = !phi.allFinite() ||
                   (xtx * phi - xty).norm() > 1e-6 * (1.0 + xty.norm());
  if (bad) {
    // Rank-deficient design (constant or short series): tiny ridge stabilizes.
    const double lambda = 1e-8 * (xtx.trace() / order + 1.0);
    phi = (xtx + lambda * Eigen::MatrixXd::Identity(order, order)).ldlt().solve(xty);
  }

  m.coef.assign(phi.data(), phi.data() + order);
  const double rss = (y - x * phi).squaredNorm();
  m.sigma2 = rss / rows;
  // Floor the RSS so a perfect fit cannot push the log to -inf; the floor is
  // relative to the series energy, keeping exact recoveries comparable.
  const double floored = std::max(rss, 1e-12 * energy + 1e-300);
  m.aic = rows * std::log(floored / rows) + 2.0 * (order + 1);
  return m;
}

ArModel fit_ar_auto(const std::vector<double>& series, int max_order) {
  const int n = static_cast<int>(series.size());
  if (max_order < 1) throw ValidationError("max_order must be positive");
  ArModel best;
  bool have = false;
  for (int p = 1; p <= max_order; ++p) {
    if (n < p + 10) break;  // too little history to trust this order
    const ArModel m = fit_ar(series, p);
    if (!have || m.aic < best.aic) {
      best = m;
      have = true;
    }
  }
  if (!have)
    throw ValidationError("series of length " + std::to_string(n) +
                          " is too short for autoregression (need at least 11)");
  return best;
}

std::vector<std::int64_t> forecast_ar(const ArModel& model,
                                      const std::vector<double>& history, int horizon) {
  if (horizon < 0) throw ValidationError("horizon cannot be negative");
  if (static_cast<int>(history.size()) < model.order)
    throw ValidationError("history shorter than the model order");
  std::vector<double> state;
  state.reserve(history.size() + horizon);
  for (double v : history) state.push_back(v - model.mean);
  std::vector<std::int64_t> out;
  out.reserve(horizon);
  for (int h = 0; h < horizon; ++h) {
    double next = 0.0;
    for (int j = 0; j < model.order; ++j)
      next += model.coef[j] * state[state.size() - 1 - j];
    state.push_back(next);
    out.push_back(core::round_half_up(std::max(0.0, next + model.mean)));
  }
  return out;
}

std::vector<std::int64_t> forecast_constant(const std::vector<double>& history,
                                            int horizon) {
  if (history.empty()) throw ValidationError("cannot forecast from an empty history");
  if (horizon < 0) throw ValidationError("horizon cannot be negative");
  const std::int64_t v = core::round_half_up(std::max(0.0, mean_of(history)));
  return std::vector<std::int64_t>(static_cast<std::size_t>(horizon), v);
}

ForecastResult forecast_matrix(const core::DemandMatrix& history, int horizon,
                               int max_order) {
  history.validate();
  if (history.periods < 1) throw ValidationError("history matrix has no weeks");
  ForecastResult res;
  res.matrix = core::DemandMatrix(horizon, history.commodities);
  res.order.resize(history.commodities, 0);
  for (int k = 0; k < history.commodities; ++k) {
    const auto col = history.column(k);
    std::vector<double> series(col.begin(), col.end());
    std::vector<std::int64_t> fc;
    if (history.periods < 11) {
      fc = forecast_constant(series, horizon);
      res.notes.push_back("commodity " + std::to_string(k) +
                          ": history too short for autoregression, using the mean");
    } else {
      const ArModel m = fit_ar_auto(series, max_order);
      res.order[k] = m.order;
      fc = forecast_ar(m, series, horizon);
    }
    for (int t = 0; t < horizon; ++t) res.matrix.at(t, k) = fc[t];
  }
  return res;
}

}  // namespace snd::forecast
