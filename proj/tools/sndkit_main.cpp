#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "snd/core/aggregate.hpp"
#include "snd/core/demand_io.hpp"
#include "snd/core/errors.hpp"
#include "snd/core/instance_io.hpp"
#include "snd/core/synthetic.hpp"
#include "snd/forecast/forecast.hpp"
#include "snd/forecast/forecast_io.hpp"
#include "snd/forecast/metrics.hpp"
#include "snd/mappings/periodic.hpp"
#include "snd/pde/pipeline.hpp"
#include "snd/pde/report.hpp"
#include "snd/plan/plan_io.hpp"
#include "snd/plan/solve.hpp"

namespace {

using nlohmann::ordered_json;
using namespace snd;

// Accepts a bare array, an estimate document, or an analysis candidate.
std::vector<std::int64_t> load_periodic(const std::string& path) {
  const ordered_json j = core::parse_json_file(path);
  const ordered_json* arr = nullptr;
  if (j.is_array())
    arr = &j;
  else if (j.is_object() && j.contains("periodic_demand"))
    arr = &j.at("periodic_demand");
  if (!arr || !arr->is_array())
    throw ValidationError(path + ": expected an array or a document with periodic_demand");
  std::vector<std::int64_t> y;
  for (const auto& v : *arr) {
    if (!v.is_number_integer())
      throw ValidationError(path + ": periodic demand must be integer");
    y.push_back(v.get<std::int64_t>());
  }
  return y;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

ordered_json estimate_to_json(const mappings::PeriodicEstimate& e) {
  return ordered_json{{"mapping", mappings::to_string(e.mapping)},
                      {"periodic_demand", e.demand},
                      {"raw_statistic", e.raw}};
}

void add_solver_flags(CLI::App* cmd, milp::SolveOptions& opts) {
  cmd->add_option("--gap-limit", opts.gap_limit,
                  "Stop the design solve at this relative gap");
  cmd->add_option("--node-limit", opts.node_limit,
                  "Cap on branch-and-bound nodes per solve");
}

int run(int argc, char** argv) {
  CLI::App app{"Periodic demand estimation toolkit for cyclic service network design"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  core::SyntheticConfig cfg;
  std::string gen_instance_out, gen_history_out, gen_actuals_out;
  std::string gen_history_matrix_out, gen_actuals_matrix_out;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic instance with daily demand");
  gen->add_option("--seed", cfg.seed, "RNG seed");
  gen->add_option("--terminals", cfg.terminals, "Number of terminals on the ring");
  gen->add_option("--commodities", cfg.commodities, "Number of commodities");
  gen->add_option("--commodities-per-od", cfg.commodities_per_od,
                  "Commodities sharing each origin/destination lane");
  gen->add_option("--trains-per-week", cfg.trains_per_week, "Departure slots per lane");
  gen->add_option("--history-weeks", cfg.history_weeks, "Weeks of demand history");
  gen->add_option("--horizon-weeks", cfg.horizon_weeks, "Weeks of evaluation horizon");
  gen->add_option("--base-demand", cfg.base_weekly_demand,
                  "Mean weekly containers per commodity");
  gen->add_option("--seasonal-amplitude", cfg.seasonal_amplitude, "Yearly swing, 0..1");
  gen->add_option("--trend", cfg.trend, "Linear demand drift per year");
  gen->add_option("--noise", cfg.noise_level, "Relative daily noise");
  gen->add_option("--spike-prob", cfg.spike_probability, "Chance of a daily surge");
  gen->add_option("--spike-mult", cfg.spike_multiplier, "Surge multiplier");
  gen->add_option("--tightness", cfg.capacity_tightness,
                  "Train feet relative to mean lane demand");
  gen->add_option("--cost-scale", cfg.cost_scale, "Scales all costs");
  gen->add_option("--instance-out", gen_instance_out, "Instance JSON path")->required();
  gen->add_option("--history-out", gen_history_out, "Daily history CSV path");
  gen->add_option("--actuals-out", gen_actuals_out, "Daily horizon CSV path");
  gen->add_option("--history-matrix-out", gen_history_matrix_out,
                  "Weekly history matrix JSON path");
  gen->add_option("--actuals-matrix-out", gen_actuals_matrix_out,
                  "Weekly horizon matrix JSON path");

  // ---- aggregate ----------------------------------------------------------
  std::string agg_daily, agg_instance, agg_out;
  int agg_commodities = 0;
  auto* agg = app.add_subcommand("aggregate", "Sum daily CSV demand into Monday-aligned weeks");
  agg->add_option("--daily", agg_daily, "Daily demand CSV")->required();
  agg->add_option("--commodities", agg_commodities, "Commodity count");
  agg->add_option("--instance", agg_instance, "Instance JSON to take the count from");
  agg->add_option("--out", agg_out, "Weekly matrix JSON path")->required();

  // ---- forecast -----------------------------------------------------------
  std::string fc_history, fc_out, fc_actuals, fc_accuracy_json, fc_accuracy_csv;
  int fc_weeks = 0, fc_max_order = 10;
  auto* fc = app.add_subcommand("forecast", "Fit per-commodity AR models and forecast");
  fc->add_option("--history", fc_history, "Weekly history matrix JSON")->required();
  fc->add_option("--weeks", fc_weeks, "Weeks to forecast")->required();
  fc->add_option("--max-order", fc_max_order, "Highest AR order to consider");
  fc->add_option("--out", fc_out, "Forecast JSON path")->required();
  fc->add_option("--actuals", fc_actuals, "Actual weekly matrix to score against");
  fc->add_option("--accuracy-json", fc_accuracy_json, "Accuracy report JSON path");
  fc->add_option("--accuracy-csv", fc_accuracy_csv, "Accuracy report CSV path");

  // ---- estimate -----------------------------------------------------------
  std::string est_matrix, est_mapping, est_out;
  auto* est = app.add_subcommand("estimate", "Compress weekly demand into periodic demand");
  est->add_option("--matrix", est_matrix, "Weekly matrix JSON")->required();
  est->add_option("--mapping", est_mapping, "MAX, MEAN, Q2 or Q3; all four when omitted");
  est->add_option("--out", est_out, "Estimate JSON path")->required();

  // ---- plan ---------------------------------------------------------------
  std::string plan_instance, plan_periodic, plan_weeks, plan_out;
  milp::SolveOptions plan_opts;
  auto* pl = app.add_subcommand("plan", "Size a design and route each week against it");
  pl->add_option("--instance", plan_instance, "Instance JSON")->required();
  pl->add_option("--periodic", plan_periodic, "Periodic demand JSON")->required();
  pl->add_option("--weeks", plan_weeks,
                 "Weekly matrix JSON; one week at the periodic demand when omitted");
  pl->add_option("--out", plan_out, "Plan JSON path")->required();
  add_solver_flags(pl, plan_opts);

  // ---- analyze1 -----------------------------------------------------------
  std::string a1_instance, a1_actuals, a1_out;
  milp::SolveOptions a1_opts;
  auto* a1 = app.add_subcommand(
      "analyze1", "Score all candidate mappings on actual weeks against weekly redesign");
  a1->add_option("--instance", a1_instance, "Instance JSON")->required();
  a1->add_option("--actuals", a1_actuals, "Actual weekly matrix JSON")->required();
  a1->add_option("--out", a1_out, "Analysis JSON path")->required();
  add_solver_flags(a1, a1_opts);

  // ---- analyze2 -----------------------------------------------------------
  std::string a2_instance, a2_forecast, a2_actuals, a2_out;
  milp::SolveOptions a2_opts;
  auto* a2 = app.add_subcommand(
      "analyze2", "Choose a mapping on forecasts, then pay for it on actuals");
  a2->add_option("--instance", a2_instance, "Instance JSON")->required();
  a2->add_option("--forecast", a2_forecast, "Forecast weekly matrix JSON")->required();
  a2->add_option("--actuals", a2_actuals, "Actual weekly matrix JSON")->required();
  a2->add_option("--out", a2_out, "Analysis JSON path")->required();
  add_solver_flags(a2, a2_opts);

  // ---- report -------------------------------------------------------------
  std::string rep_analysis, rep_format = "table", rep_out;
  auto* rep = app.add_subcommand("report", "Render an analysis document");
  rep->add_option("--analysis", rep_analysis, "Analysis JSON path")->required();
  rep->add_option("--format", rep_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  rep->add_option("--out", rep_out, "Write here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    const auto out = core::generate_synthetic(cfg);
    core::save_instance(gen_instance_out, out.instance);
    std::cout << "instance: " << out.instance.blocks.size() << " blocks, "
              << out.instance.commodities.size() << " commodities -> "
              << gen_instance_out << '\n';
    if (!gen_history_out.empty()) core::save_daily_demand(gen_history_out, out.history_daily);
    if (!gen_actuals_out.empty()) core::save_daily_demand(gen_actuals_out, out.horizon_daily);
    if (!gen_history_matrix_out.empty()) core::save_matrix(gen_history_matrix_out, out.history);
    if (!gen_actuals_matrix_out.empty()) core::save_matrix(gen_actuals_matrix_out, out.horizon);
    return 0;
  }

  if (agg->parsed()) {
    int nk = agg_commodities;
    if (!agg_instance.empty())
      nk = static_cast<int>(core::load_instance(agg_instance).commodities.size());
    if (nk <= 0)
      throw ValidationError("pass --commodities or --instance to size the matrix");
    const auto records = core::load_daily_demand(agg_daily);
    const auto result = core::aggregate_to_periods(records, nk);
    print_warnings(result.warnings);
    core::save_matrix(agg_out, result.matrix);
    std::cout << "aggregated " << result.matrix.periods << " week(s) x "
              << result.matrix.commodities << " commodities -> " << agg_out << '\n';
    return 0;
  }

  if (fc->parsed()) {
    const auto history = forecast::load_matrix_flexible(fc_history);
    const auto result = forecast::forecast_matrix(history, fc_weeks, fc_max_order);
    print_warnings(result.notes);
    forecast::save_forecast(fc_out, result);
    std::cout << "forecast " << result.matrix.periods << " week(s) -> " << fc_out << '\n';
    if (!fc_actuals.empty()) {
      const auto actual = forecast::load_matrix_flexible(fc_actuals);
      const auto acc = forecast::accuracy(actual, result.matrix);
      print_warnings(acc.notes);
      if (acc.overall_wape)
        std::cout << "overall WAPE " << *acc.overall_wape << "%, RMSE "
                  << acc.overall_rmse << '\n';
      if (!fc_accuracy_json.empty())
        core::write_json_file(fc_accuracy_json, forecast::accuracy_to_json(acc));
      if (!fc_accuracy_csv.empty()) {
        std::ofstream os(fc_accuracy_csv);
        if (!os) throw IoError("cannot write " + fc_accuracy_csv);
        os << forecast::accuracy_to_csv(acc);
      }
    } else if (!fc_accuracy_json.empty() || !fc_accuracy_csv.empty()) {
      throw ValidationError("accuracy output needs --actuals");
    }
    return 0;
  }

  if (est->parsed()) {
    const auto m = forecast::load_matrix_flexible(est_matrix);
    ordered_json doc;
    if (est_mapping.empty()) {
      ordered_json cands = ordered_json::array();
      for (const auto& e : mappings::build_candidate_set(m))
        cands.push_back(estimate_to_json(e));
      doc = ordered_json{{"candidates", std::move(cands)}};
    } else {
      doc = estimate_to_json(mappings::map_periodic(m, mappings::mapping_from_string(est_mapping)));
    }
    core::write_json_file(est_out, doc);
    std::cout << "estimate -> " << est_out << '\n';
    return 0;
  }

  if (pl->parsed()) {
    const auto inst = core::load_instance(plan_instance);
    const auto y = load_periodic(plan_periodic);
    core::DemandMatrix weeks;
    if (plan_weeks.empty()) {
      weeks = core::DemandMatrix(1, static_cast<int>(y.size()));
      for (std::size_t k = 0; k < y.size(); ++k) weeks.at(0, static_cast<int>(k)) = y[k];
    } else {
      weeks = forecast::load_matrix_flexible(plan_weeks);
    }
    const auto plan = plan::solve_plan(inst, y, weeks, plan_opts);
    plan::save_plan(plan_out, plan);
    std::cout << "plan: total cost " << plan.total_cost << " over "
              << plan.weeks.size() << " week(s) -> " << plan_out << '\n';
    return 0;
  }

  if (a1->parsed()) {
    const auto inst = core::load_instance(a1_instance);
    const auto actual = forecast::load_matrix_flexible(a1_actuals);
    const auto analysis = pde::analyze_actuals(inst, actual, a1_opts);
    core::write_json_file(a1_out, pde::analysis1_to_json(analysis));
    std::cout << "selected "
              << mappings::to_string(
                     analysis.pde.candidates.at(analysis.pde.selected).mapping)
              << " -> " << a1_out << '\n';
    return 0;
  }

  if (a2->parsed()) {
    const auto inst = core::load_instance(a2_instance);
    const auto fcast = forecast::load_matrix_flexible(a2_forecast);
    const auto actual = forecast::load_matrix_flexible(a2_actuals);
    const auto analysis = pde::analyze_forecast(inst, fcast, actual, a2_opts);
    core::write_json_file(a2_out, pde::analysis2_to_json(analysis));
    std::cout << "selected "
              << mappings::to_string(
                     analysis.step1.candidates.at(analysis.step1.selected).mapping)
              << ", actuals cost " << analysis.step2_cost << " -> " << a2_out << '\n';
    return 0;
  }

  if (rep->parsed()) {
    const auto analysis = core::parse_json_file(rep_analysis);
    std::string text;
    if (rep_format == "table")
      text = pde::render_table(analysis);
    else if (rep_format == "csv")
      text = pde::render_csv(analysis);
    else
      text = analysis.dump(2) + "\n";
    if (rep_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream os(rep_out);
      if (!os) throw IoError("cannot write " + rep_out);
      os << text;
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return 2;
  }
}
