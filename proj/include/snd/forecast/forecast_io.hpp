#ifndef SND_FORECAST_FORECAST_IO_HPP
#define SND_FORECAST_FORECAST_IO_HPP

#include <json.hpp>

#include <string>

#include "snd/forecast/forecast.hpp"
#include "snd/forecast/metrics.hpp"

namespace snd::forecast {

nlohmann::ordered_json forecast_to_json(const ForecastResult& r);
void save_forecast(const std::string& path, const ForecastResult& r);

// Accepts either a bare matrix document or a forecast document wrapping one.
core::DemandMatrix load_matrix_flexible(const std::string& path);

nlohmann::ordered_json accuracy_to_json(const MatrixAccuracy& a);
std::string accuracy_to_csv(const MatrixAccuracy& a);  // NA marks undefined WAPE

}  // namespace snd::forecast

#endif
