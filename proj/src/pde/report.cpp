#include "snd/pde/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "snd/core/errors.hpp"

namespace snd::pde {

namespace {

using nlohmann::ordered_json;

std::string num17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string money(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// Columns after the first are right-aligned; the first is left-aligned.
std::string align(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      std::size_t pad = width[i] - row[i].size();
      if (i == 0)
        out << row[i] << std::string(pad, ' ');
      else
        out << std::string(pad, ' ') << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> candidate_row(const ordered_json& c, const char* gap_key,
                                       bool selected) {
  return {c.at("mapping").get<std::string>() + (selected ? " *" : ""),
          money(c.at("total_cost").get<double>()),
          money(c.at("design_cost_per_week").get<double>()),
          money(c.at("flow_cost_total").get<double>()),
          money(c.at(gap_key).get<double>()),
          money(c.at("demand_gap_percent").get<double>()),
          c.at("design_status").get<std::string>()};
}

std::string kind_of(const ordered_json& j) {
  std::string kind = j.at("analysis").get<std::string>();
  if (kind != "actuals" && kind != "forecast")
    throw ValidationError("unknown analysis kind '" + kind + "'");
  return kind;
}

std::string table_actuals(const ordered_json& j) {
  std::ostringstream out;
  out << "Candidate mappings on actual demand (" << j.at("weeks").get<int>()
      << " week(s); * marks the selected mapping)\n"
      << "Reference cost (fresh design every week): "
      << money(j.at("reference_cost").get<double>()) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"mapping", "total_cost", "design/week", "flow_total", "cost_gap%",
                  "demand_gap%", "status"});
  std::string selected = j.at("selected").get<std::string>();
  for (const auto& c : j.at("candidates"))
    rows.push_back(candidate_row(c, "cost_gap_percent",
                                 c.at("mapping").get<std::string>() == selected));
  out << align(rows);
  return out.str();
}

std::string table_forecast(const ordered_json& j) {
  std::ostringstream out;
  out << "Step 1: candidate mappings on forecast demand ("
      << j.at("weeks").get<int>()
      << " week(s); gaps vs. the MEAN candidate; * marks the selected mapping)\n\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"mapping", "total_cost", "design/week", "flow_total",
                  "gap_vs_mean%", "demand_gap%", "status"});
  std::string selected = j.at("selected").get<std::string>();
  for (const auto& c : j.at("step1_candidates"))
    rows.push_back(candidate_row(c, "cost_gap_vs_mean_percent",
                                 c.at("mapping").get<std::string>() == selected));
  out << align(rows);

  const auto& s2 = j.at("step2");
  out << "\nStep 2: " << selected << " design frozen, flows meet actual demand\n";
  std::vector<std::vector<std::string>> rows2;
  rows2.push_back({"total_cost", money(s2.at("total_cost").get<double>())});
  rows2.push_back({"design/week", money(s2.at("design_cost_per_week").get<double>())});
  rows2.push_back({"flow_total", money(s2.at("flow_cost_total").get<double>())});
  rows2.push_back({"reference_cost", money(s2.at("reference_cost").get<double>())});
  rows2.push_back({"cost_gap%", money(s2.at("cost_gap_percent").get<double>())});
  rows2.push_back({"status", s2.at("design_status").get<std::string>()});
  out << align(rows2);
  return out.str();
}

const char* kCsvHeader =
    "section,mapping,total_cost,design_cost_per_week,flow_cost_total,"
    "gap_percent,demand_gap_percent,design_status,selected\n";

void csv_candidate(std::ostringstream& out, const char* section, const ordered_json& c,
                   const char* gap_key, bool selected) {
  out << section << ',' << c.at("mapping").get<std::string>() << ','
      << num17(c.at("total_cost").get<double>()) << ','
      << num17(c.at("design_cost_per_week").get<double>()) << ','
      << num17(c.at("flow_cost_total").get<double>()) << ','
      << num17(c.at(gap_key).get<double>()) << ','
      << num17(c.at("demand_gap_percent").get<double>()) << ','
      << c.at("design_status").get<std::string>() << ',' << (selected ? 1 : 0) << '\n';
}

std::string csv_actuals(const ordered_json& j) {
  std::ostringstream out;
  out << kCsvHeader;
  std::string selected = j.at("selected").get<std::string>();
  for (const auto& c : j.at("candidates"))
    csv_candidate(out, "candidate", c, "cost_gap_percent",
                  c.at("mapping").get<std::string>() == selected);
  out << "reference,," << num17(j.at("reference_cost").get<double>()) << ",,,,,,\n";
  return out.str();
}

std::string csv_forecast(const ordered_json& j) {
  std::ostringstream out;
  out << kCsvHeader;
  std::string selected = j.at("selected").get<std::string>();
  for (const auto& c : j.at("step1_candidates"))
    csv_candidate(out, "step1", c, "cost_gap_vs_mean_percent",
                  c.at("mapping").get<std::string>() == selected);
  const auto& s2 = j.at("step2");
  out << "step2," << selected << ',' << num17(s2.at("total_cost").get<double>()) << ','
      << num17(s2.at("design_cost_per_week").get<double>()) << ','
      << num17(s2.at("flow_cost_total").get<double>()) << ','
      << num17(s2.at("cost_gap_percent").get<double>()) << ",,"
      << s2.at("design_status").get<std::string>() << ",1\n";
  out << "reference,," << num17(s2.at("reference_cost").get<double>()) << ",,,,,,\n";
  return out.str();
}

}  // namespace

std::string render_table(const nlohmann::ordered_json& analysis) {
  return kind_of(analysis) == "actuals" ? table_actuals(analysis)
                                        : table_forecast(analysis);
}

std::string render_csv(const nlohmann::ordered_json& analysis) {
  return kind_of(analysis) == "actuals" ? csv_actuals(analysis)
                                        : csv_forecast(analysis);
}

}  // namespace snd::pde
