#include "snd/forecast/forecast_io.hpp"

#include <cstdio>

#include "snd/core/instance_io.hpp"

namespace snd::forecast {

namespace {

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::ordered_json forecast_to_json(const ForecastResult& r) {
  return nlohmann::ordered_json{{"matrix", core::matrix_to_json(r.matrix)},
                                {"ar_order", r.order},
                                {"notes", r.notes}};
}

void save_forecast(const std::string& path, const ForecastResult& r) {
  core::write_json_file(path, forecast_to_json(r));
}

core::DemandMatrix load_matrix_flexible(const std::string& path) {
  const auto j = core::parse_json_file(path);
  if (j.contains("matrix")) return core::matrix_from_json(j.at("matrix"));
  return core::matrix_from_json(j);
}

nlohmann::ordered_json accuracy_to_json(const MatrixAccuracy& a) {
  nlohmann::ordered_json per = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < a.wape_per_commodity.size(); ++k) {
    nlohmann::ordered_json row;
    row["commodity"] = k;
    if (a.wape_per_commodity[k])
      row["wape"] = *a.wape_per_commodity[k];
    else
      row["wape"] = nullptr;
    row["rmse"] = a.rmse_per_commodity[k];
    per.push_back(std::move(row));
  }
  nlohmann::ordered_json j;
  j["per_commodity"] = std::move(per);
  if (a.overall_wape)
    j["overall_wape"] = *a.overall_wape;
  else
    j["overall_wape"] = nullptr;
  j["overall_rmse"] = a.overall_rmse;
  j["notes"] = a.notes;
  return j;
}

std::string accuracy_to_csv(const MatrixAccuracy& a) {
  std::string out = "commodity,wape,rmse\n";
  for (std::size_t k = 0; k < a.wape_per_commodity.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += a.wape_per_commodity[k] ? num17(*a.wape_per_commodity[k]) : "NA";
    out += ',';
    out += num17(a.rmse_per_commodity[k]);
    out += '\n';
  }
  out += "overall,";
  out += a.overall_wape ? num17(*a.overall_wape) : "NA";
  out += ',';
  out += num17(a.overall_rmse);
  out += '\n';
  return out;
}

}  // namespace snd::forecast
