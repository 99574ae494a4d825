// Acceptance run: exercises the shipped toolkit end to end and prints one
// PASS/FAIL line per criterion. The sndkit binary path comes in as argv[1]
// and is used by the rerun-determinism criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle_plan.hpp"
#include "oracle_simplex.hpp"
#include "random_models.hpp"
#include "snd/core/errors.hpp"
#include "snd/core/instance_io.hpp"
#include "snd/core/synthetic.hpp"
#include "snd/forecast/forecast.hpp"
#include "snd/mappings/periodic.hpp"
#include "snd/pde/pipeline.hpp"
#include "snd/plan/solve.hpp"

using namespace snd;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_sndkit;  // path to the CLI binary under test

double elapsed_s(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

core::SyntheticConfig small_config(std::uint64_t seed, std::mt19937_64& rng) {
  core::SyntheticConfig cfg;
  cfg.seed = seed;
  cfg.terminals = 2 + static_cast<int>(rng() % 2);
  cfg.commodities = 1 + static_cast<int>(rng() % 2);
  cfg.commodities_per_od = 1 + static_cast<int>(rng() % 2);
  cfg.trains_per_week = 1 + static_cast<int>(rng() % 2);
  cfg.history_weeks = 0;
  cfg.horizon_weeks = 2 + static_cast<int>(rng() % 3);
  cfg.base_weekly_demand = 2.5;
  cfg.noise_level = 0.3;
  cfg.spike_probability = 0.05;
  cfg.capacity_tightness = 0.7 + 0.1 * static_cast<double>(rng() % 6);
  return cfg;
}

// One lane, two scheduled blocks of different size, expensive outsourcing.
// The small block carries 8 containers a week, the big one 12.
core::Instance surge_instance() {
  core::Instance inst;
  inst.name = "surge";
  core::SpaceTimeGraph& g = inst.graph;
  const int win = g.add_node(core::NodeKind::Win, "T0", -1, "WIN_T0");
  const int din = g.add_node(core::NodeKind::Din, "T0", -1, "DIN_T0");
  const int dep_a = g.add_node(core::NodeKind::TrainEvent, "T0", 0, "T0@0");
  const int arr_a = g.add_node(core::NodeKind::TrainEvent, "T1", 1, "T1@1");
  const int dep_b = g.add_node(core::NodeKind::TrainEvent, "T0", 2, "T0@2");
  const int arr_b = g.add_node(core::NodeKind::TrainEvent, "T1", 3, "T1@3");
  const int snk = g.add_node(core::NodeKind::Sink, "T1", -1, "SINK_T1");
  const int split = g.add_arc(win, din, core::ArcKind::WinSplit);
  const int in_a = g.add_arc(din, dep_a, core::ArcKind::Waiting);
  const int tr_a = g.add_arc(dep_a, arr_a, core::ArcKind::TrainMoving, 160.0);
  const int out_a = g.add_arc(arr_a, snk, core::ArcKind::Other);
  const int in_b = g.add_arc(din, dep_b, core::ArcKind::Waiting);
  const int tr_b = g.add_arc(dep_b, arr_b, core::ArcKind::TrainMoving, 240.0);
  const int out_b = g.add_arc(arr_b, snk, core::ArcKind::Other);

  inst.commodities.push_back({0, "T0", "T1", core::ContainerType::C40});

  core::Block a;
  a.id = 0;
  a.arcs = {split, in_a, tr_a, out_a};
  a.design_cost = 80.0;
  a.admissible = {0};
  a.flow_cost[0] = 1.0;
  inst.blocks.push_back(a);

  core::Block b;
  b.id = 1;
  b.arcs = {split, in_b, tr_b, out_b};
  b.design_cost = 120.0;
  b.admissible = {0};
  b.flow_cost[0] = 1.0;
  inst.blocks.push_back(b);

  core::Block art;
  art.id = 2;
  art.artificial = true;
  art.admissible = {0};
  art.flow_cost[0] = 40.0;
  inst.blocks.push_back(art);

  inst.validate();
  return inst;
}

core::DemandMatrix surge_weeks() {
  core::DemandMatrix m(6, 1);
  const std::int64_t w[6] = {10, 4, 18, 4, 10, 4};
  for (int t = 0; t < 6; ++t) m.at(t, 0) = w[t];
  return m;
}

std::int64_t outsourced_containers(const plan::TacticalPlan& p, const core::Instance& inst) {
  std::int64_t n = 0;
  for (const auto& wk : p.weeks)
    for (const auto& b : inst.blocks)
      if (b.artificial)
        for (auto [k, c] : wk.flows[b.id]) n += c;
  return n;
}

// --- criterion 1 -----------------------------------------------------------
// When every evaluated week equals the periodic demand, the sequential
// pipeline must price out exactly like the joint design-and-flow optimum.
bool c1_steady_identity(std::string& why) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(9001);
  int accepted = 0;
  for (std::uint64_t seed = 1; accepted < 20; ++seed) {
    if (seed > 5000) {
      why = "could not collect 20 instances";
      return false;
    }
    const auto cfg = small_config(seed, rng);
    const auto gen = core::generate_synthetic(cfg);
    const auto& inst = gen.instance;
    if (inst.blocks.size() > 8) continue;
    if (gen.horizon.total() > 6 * gen.horizon.periods) continue;

    const auto y_p = mappings::map_periodic(gen.horizon, mappings::PeriodicMapping::Mean).demand;
    const int tt = gen.horizon.periods;
    core::DemandMatrix steady(tt, gen.horizon.commodities);
    for (int t = 0; t < tt; ++t)
      for (int k = 0; k < steady.commodities; ++k) steady.at(t, k) = y_p[k];

    const auto scan = plan_oracle::best_total(inst, steady);
    if (!(scan.cost < plan_oracle::kInfCost)) continue;
    // Re-seed designs in a near tie: equality checks would chase noise.
    if (scan.runner_up - scan.cost <= 1e-7 * std::max(1.0, std::fabs(scan.cost))) continue;

    const auto seq = plan::solve_plan(inst, y_p, steady);
    const auto bp = plan::solve_bp(inst, y_p);
    const double tol = 1e-6 * (1.0 + std::fabs(scan.cost));
    if (std::fabs(seq.total_cost - scan.cost) > tol) {
      why = "sequential " + std::to_string(seq.total_cost) + " vs joint " +
            std::to_string(scan.cost) + " on seed " + std::to_string(seed);
      return false;
    }
    if (std::fabs(seq.total_cost - tt * bp.total_cost) > tol) {
      why = "sequential differs from weeks * one-shot optimum on seed " +
            std::to_string(seed);
      return false;
    }
    ++accepted;
  }
  if (elapsed_s(t0) > 120.0) {
    why = "took " + fmt("%.1f", elapsed_s(t0)) + "s, budget is 120s";
    return false;
  }
  return true;
}

// --- criterion 2 -----------------------------------------------------------
// Redesigning from scratch every week can only be cheaper than any fixed
// design; the reference must lower-bound all candidates, strictly when weeks
// swing hard.
bool c2_reference_bound(std::string& why) {
  std::mt19937_64 rng(1234);
  int checked = 0;
  for (std::uint64_t seed = 40; checked < 8; ++seed) {
    if (seed > 2000) {
      why = "could not collect 8 instances";
      return false;
    }
    const auto cfg = small_config(seed, rng);
    const auto gen = core::generate_synthetic(cfg);
    if (gen.instance.blocks.size() > 8) continue;
    if (gen.horizon.total() > 6 * gen.horizon.periods) continue;
    const auto a = pde::analyze_actuals(gen.instance, gen.horizon);
    for (std::size_t i = 0; i < a.pde.candidates.size(); ++i)
      if (a.pde.candidates[i].plan.total_cost <
          a.reference_cost - 1e-6 * (1.0 + a.reference_cost)) {
        why = "candidate " + std::to_string(i) + " under the reference on seed " +
              std::to_string(seed);
        return false;
      }
    ++checked;
  }

  const auto a = pde::analyze_actuals(surge_instance(), surge_weeks());
  if (std::fabs(a.reference_cost - 730.0) > 1e-9) {
    why = "hand-built reference is " + std::to_string(a.reference_cost) + ", want 730";
    return false;
  }
  for (double g : a.gap_percent)
    if (g < 0.5) {
      why = "expected a strictly positive gap, got " + fmt("%.3f", g);
      return false;
    }
  return true;
}

// --- criterion 3 -----------------------------------------------------------
// The feet-minimal closed-form split must reproduce the optimizer's platform
// counts on every block that carries flow, mixed families included.
bool c3_platform_closed_form(std::string& why) {
  std::mt19937_64 rng(55);
  int positive = 0, mixed = 0;
  for (std::uint64_t seed = 500; positive < 30 || mixed < 5; ++seed) {
    if (seed > 3000) {
      why = "not enough flow-carrying blocks (" + std::to_string(positive) + ", " +
            std::to_string(mixed) + " mixed)";
      return false;
    }
    core::SyntheticConfig cfg;
    cfg.seed = seed;
    cfg.terminals = 2;
    cfg.commodities = 2 + static_cast<int>(rng() % 3);
    cfg.commodities_per_od = 2;
    cfg.trains_per_week = 1 + static_cast<int>(rng() % 2);
    cfg.history_weeks = 0;
    cfg.horizon_weeks = 2;
    cfg.base_weekly_demand = 4.0;
    cfg.capacity_tightness = 0.8 + 0.1 * static_cast<double>(rng() % 5);
    const auto gen = core::generate_synthetic(cfg);
    const auto& inst = gen.instance;

    const auto y = mappings::map_periodic(gen.horizon, mappings::PeriodicMapping::Max).demand;
    const auto sol = plan::solve_bp(inst, y);
    if (sol.status != milp::SolveStatus::Optimal) continue;

    std::vector<double> used(inst.graph.arcs.size(), 0.0);
    for (const auto& b : inst.blocks) {
      if (b.artificial) continue;
      std::int64_t n40 = 0, n53 = 0;
      for (auto [k, c] : sol.week.flows[b.id])
        (inst.commodities[k].type == core::ContainerType::C40 ? n40 : n53) += c;
      if (n40 + n53 == 0) continue;

      const auto want = plan::platform_requirement(n40, n53);
      const auto& got = sol.week.platforms[b.id];
      if (got.v40 != want.v40 || got.v53 != want.v53) {
        why = "block " + std::to_string(b.id) + " platforms (" +
              std::to_string(got.v40) + "," + std::to_string(got.v53) + ") vs (" +
              std::to_string(want.v40) + "," + std::to_string(want.v53) + ")";
        return false;
      }
      std::int64_t o40 = 0, o53 = 0;
      plan_oracle::oracle_platform_feet(n40, n53, inst.params.l40, inst.params.l53,
                                        &o40, &o53);
      const double feet = inst.params.l40 * got.v40 + inst.params.l53 * got.v53;
      const double oracle_feet = inst.params.l40 * o40 + inst.params.l53 * o53;
      if (std::fabs(feet - oracle_feet) > 1e-9) {
        why = "closed form is not feet-minimal on block " + std::to_string(b.id);
        return false;
      }
      for (int a : b.arcs)
        if (inst.graph.arcs[a].kind == core::ArcKind::TrainMoving) used[a] += feet;
      ++positive;
      if (n40 > 0 && n53 > 0) ++mixed;
    }
    for (const auto& arc : inst.graph.arcs)
      if (used[arc.id] > arc.capacity_feet + 1e-6) {
        why = "train arc " + std::to_string(arc.id) + " over its feet budget";
        return false;
      }
  }
  return true;
}

// --- criterion 4 -----------------------------------------------------------
bool c4_engine_oracles(std::string& why) {
  std::mt19937_64 rng(20240814);
  for (int i = 0; i < 100; ++i) {
    const auto m = tests::random_lp(rng);
    const auto mine = milp::solve_lp(m);
    const auto oracle = tests::oracle_solve_lp(m);
    const bool both_opt = mine.status == milp::SolveStatus::Optimal &&
                          oracle.status == tests::OracleStatus::Optimal;
    if ((mine.status == milp::SolveStatus::Optimal) !=
        (oracle.status == tests::OracleStatus::Optimal) ||
        (mine.status == milp::SolveStatus::Infeasible) !=
            (oracle.status == tests::OracleStatus::Infeasible)) {
      why = "LP status mismatch at case " + std::to_string(i);
      return false;
    }
    if (both_opt) {
      if (std::fabs(mine.objective - oracle.objective) >
          1e-6 * (1.0 + std::fabs(oracle.objective))) {
        why = "LP objective mismatch at case " + std::to_string(i);
        return false;
      }
      if (!tests::oracle_row_feasible(m, mine.values)) {
        why = "LP solution infeasible at case " + std::to_string(i);
        return false;
      }
    }
  }
  for (int i = 0; i < 100; ++i) {
    const auto m = tests::random_milp(rng, i % 2 == 0);
    const auto mine = milp::solve_milp(m);
    const auto oracle = tests::oracle_solve_milp(m);
    const bool both_opt = mine.status == milp::SolveStatus::Optimal &&
                          oracle.status == tests::OracleStatus::Optimal;
    if ((mine.status == milp::SolveStatus::Optimal) !=
        (oracle.status == tests::OracleStatus::Optimal)) {
      why = "MILP status mismatch at case " + std::to_string(i);
      return false;
    }
    if (both_opt) {
      if (std::fabs(mine.objective - oracle.objective) >
          1e-6 * (1.0 + std::fabs(oracle.objective))) {
        why = "MILP objective mismatch at case " + std::to_string(i);
        return false;
      }
      if (!tests::oracle_row_feasible(m, mine.values)) {
        why = "MILP solution infeasible at case " + std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

// --- criterion 5 -----------------------------------------------------------
bool c5_autoregression(std::string& why) {
  // Coefficient recovery under noise.
  std::mt19937_64 rng(42);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> x{0.0};
  for (int i = 0; i < 60000; ++i) x.push_back(0.5 * x.back() + noise(rng));
  const auto m1 = forecast::fit_ar(x, 1);
  if (std::fabs(m1.coef[0] - 0.5) > 0.02) {
    why = "AR(1) coefficient came out as " + fmt("%.4f", m1.coef[0]);
    return false;
  }

  // Exact continuation of a noise-free cycle, with raw internal state: the
  // two clamped zeros in the tail are genuine negative raw values.
  std::vector<double> y{1.0, 1.0};
  while (y.size() < 24) y.push_back(y[y.size() - 1] - y[y.size() - 2]);
  const auto best = forecast::fit_ar_auto(y);
  if (best.order != 2) {
    why = "order selection picked " + std::to_string(best.order) + " instead of 2";
    return false;
  }
  const auto fc = forecast::forecast_ar(best, y, 6);
  if (fc != std::vector<std::int64_t>{1, 1, 0, 0, 0, 0}) {
    why = "cycle continuation is off";
    return false;
  }

  // The matrix driver never emits negatives and falls back on short history.
  std::mt19937_64 drng(7);
  core::DemandMatrix hist(30, 3);
  for (int t = 0; t < 30; ++t)
    for (int k = 0; k < 3; ++k)
      hist.at(t, k) = std::max<std::int64_t>(
          0, static_cast<std::int64_t>(2 + k - t / 10 + static_cast<int>(drng() % 3)));
  const auto res = forecast::forecast_matrix(hist, 8);
  for (auto v : res.matrix.values)
    if (v < 0) {
      why = "negative forecast emitted";
      return false;
    }

  core::DemandMatrix shorty(5, 1);
  for (int t = 0; t < 5; ++t) shorty.at(t, 0) = 6 + t % 2;
  const auto fb = forecast::forecast_matrix(shorty, 4);
  if (fb.order[0] != 0 || fb.notes.empty() ||
      fb.notes[0].find("mean") == std::string::npos) {
    why = "short history did not fall back to the mean";
    return false;
  }
  for (int t = 0; t < 4; ++t)
    if (fb.matrix.at(t, 0) != core::round_half_up(32.0 / 5.0)) {
      why = "fallback forecast is not the rounded mean";
      return false;
    }
  return true;
}

// --- criterion 6 -----------------------------------------------------------
bool c6_mapping_properties(std::string& why) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 1000; ++trial) {
    const int tt = 1 + static_cast<int>(rng() % 12);
    const int kk = 1 + static_cast<int>(rng() % 4);
    core::DemandMatrix m(tt, kk);
    for (auto& v : m.values)
      v = rng() % 4 == 0 ? 0 : static_cast<std::int64_t>(rng() % 31);

    const auto cands = mappings::build_candidate_set(m);
    if (cands.size() != 4 || cands[0].mapping != mappings::PeriodicMapping::Max ||
        cands[1].mapping != mappings::PeriodicMapping::Mean ||
        cands[2].mapping != mappings::PeriodicMapping::Q2 ||
        cands[3].mapping != mappings::PeriodicMapping::Q3) {
      why = "candidate order drifted";
      return false;
    }
    for (int k = 0; k < kk; ++k) {
      const auto col = m.column(k);
      const auto lohi = std::minmax_element(col.begin(), col.end());
      const double lo = static_cast<double>(*lohi.first);
      const double hi = static_cast<double>(*lohi.second);
      double sum = 0.0;
      for (auto v : col) sum += static_cast<double>(v);
      const double mx = cands[0].raw[k], mean = cands[1].raw[k];
      const double q2 = cands[2].raw[k], q3 = cands[3].raw[k];
      const bool ordered = q2 <= q3 + 1e-12 && q3 <= mx + 1e-12 && mean <= mx + 1e-12;
      const bool bounded = lo - 1e-12 <= q2 && lo - 1e-12 <= mean && mx <= hi + 1e-12;
      if (!ordered || !bounded) {
        why = "statistic ordering violated on trial " + std::to_string(trial);
        return false;
      }
      if (std::fabs(mean * tt - sum) > 1e-9 * (1.0 + sum)) {
        why = "mean does not preserve total volume";
        return false;
      }
      for (const auto& c : cands)
        if (c.demand[k] != core::round_half_up(c.raw[k])) {
          why = "rounding drifted from half-up";
          return false;
        }
    }
  }
  return true;
}

// --- criterion 7 -----------------------------------------------------------
// Three quiet weeks, two busy ones and a surge: sizing at the upper quartile
// builds the larger block and wins; the mean rounds down to the small block
// and bleeds outsourcing fees.
bool c7_quartile_beats_mean(std::string& why) {
  const auto t0 = Clock::now();
  const auto inst = surge_instance();
  const auto a = pde::analyze_actuals(inst, surge_weeks());

  const std::int64_t want_y[4] = {18, 8, 7, 10};
  const double want_cost[4] = {1250.0, 1076.0, 1076.0, 1004.0};
  for (int i = 0; i < 4; ++i) {
    if (a.pde.candidates[i].y_p[0] != want_y[i]) {
      why = "candidate " + std::to_string(i) + " sized " +
            std::to_string(a.pde.candidates[i].y_p[0]) + ", want " +
            std::to_string(want_y[i]);
      return false;
    }
    if (std::fabs(a.pde.candidates[i].plan.total_cost - want_cost[i]) > 1e-9) {
      why = "candidate " + std::to_string(i) + " costs " +
            fmt("%.6f", a.pde.candidates[i].plan.total_cost) + ", want " +
            fmt("%.0f", want_cost[i]);
      return false;
    }
  }
  if (a.pde.selected != 3) {
    why = "selected candidate " + std::to_string(a.pde.selected) + ", want Q3";
    return false;
  }
  const auto& mean_plan = a.pde.candidates[1].plan;
  const auto& q3_plan = a.pde.candidates[3].plan;
  if (!(mean_plan.built[0] == 1 && mean_plan.built[1] == 0)) {
    why = "mean candidate should open only the small block";
    return false;
  }
  if (!(q3_plan.built[0] == 0 && q3_plan.built[1] == 1)) {
    why = "Q3 candidate should open only the big block";
    return false;
  }
  if (q3_plan.design_cost_per_week <= mean_plan.design_cost_per_week) {
    why = "Q3 should pay more design per week";
    return false;
  }
  const auto mean_out = outsourced_containers(mean_plan, inst);
  const auto q3_out = outsourced_containers(q3_plan, inst);
  if (!(mean_out == 14 && q3_out == 6)) {
    why = "outsourcing containers " + std::to_string(mean_out) + " vs " +
          std::to_string(q3_out) + ", want 14 vs 6";
    return false;
  }
  if (elapsed_s(t0) > 300.0) {
    why = "took " + fmt("%.1f", elapsed_s(t0)) + "s, budget is 300s";
    return false;
  }
  return true;
}

// --- criterion 8 -----------------------------------------------------------
bool c8_cli_rerun_identical(std::string& why) {
  namespace fs = std::filesystem;
  if (g_sndkit.empty() || !fs::exists(g_sndkit)) {
    why = "sndkit binary not passed as argv[1]";
    return false;
  }
  const fs::path base = fs::temp_directory_path() / "sndkit-acceptance";
  std::error_code ec;
  fs::remove_all(base, ec);

  auto run_pipeline = [&](const fs::path& dir) -> bool {
    fs::create_directories(dir);
    const std::string d = dir.string();
    const std::string log = " >> \"" + d + "/log.txt\" 2>&1";
    const std::string steps[] = {
        "\"" + g_sndkit + "\" gen --seed 7 --history-weeks 40 --horizon-weeks 4" +
            " --instance-out \"" + d + "/inst.json\"" +
            " --history-matrix-out \"" + d + "/hist.json\"" +
            " --actuals-matrix-out \"" + d + "/act.json\"" + log,
        "\"" + g_sndkit + "\" forecast --history \"" + d + "/hist.json\"" +
            " --weeks 4 --out \"" + d + "/fc.json\"" + log,
        "\"" + g_sndkit + "\" analyze2 --instance \"" + d + "/inst.json\"" +
            " --forecast \"" + d + "/fc.json\" --actuals \"" + d + "/act.json\"" +
            " --out \"" + d + "/a2.json\"" + log,
        "\"" + g_sndkit + "\" report --analysis \"" + d + "/a2.json\"" +
            " --format csv --out \"" + d + "/a2.csv\"" + log,
    };
    for (const auto& s : steps)
      if (std::system(s.c_str()) != 0) {
        why = "pipeline step failed, see " + d + "/log.txt";
        return false;
      }
    return true;
  };

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  if (!run_pipeline(base / "run1") || !run_pipeline(base / "run2")) return false;
  for (const char* f : {"inst.json", "hist.json", "act.json", "fc.json", "a2.json", "a2.csv"}) {
    const auto a = slurp(base / "run1" / f);
    const auto b = slurp(base / "run2" / f);
    if (a.empty() || a != b) {
      why = std::string(f) + " differs between reruns";
      return false;
    }
  }
  return true;
}

// --- criterion 9 -----------------------------------------------------------
// A block-planning run at the documented scale: ~2200 blocks, 170
// commodities, a 10-week horizon, warm-started and capped.
bool c9_scale_smoke(std::string& why) {
  const auto t0 = Clock::now();
  core::SyntheticConfig cfg;
  cfg.seed = 9;
  cfg.terminals = 24;
  cfg.commodities = 170;
  cfg.commodities_per_od = 1;
  cfg.trains_per_week = 12;
  cfg.history_weeks = 0;
  cfg.horizon_weeks = 10;
  cfg.base_weekly_demand = 10.0;
  cfg.capacity_tightness = 1.0;
  const auto gen = core::generate_synthetic(cfg);
  const auto& inst = gen.instance;
  if (inst.blocks.size() < 2000 || inst.blocks.size() > 2500) {
    why = "instance has " + std::to_string(inst.blocks.size()) + " blocks";
    return false;
  }

  const auto y = mappings::map_periodic(gen.horizon, mappings::PeriodicMapping::Mean).demand;
  milp::SolveOptions opts;
  opts.gap_limit = 0.05;
  opts.node_limit = 20;
  const auto sol = plan::solve_bp(inst, y, opts);
  const double secs = elapsed_s(t0);

  if (sol.status != milp::SolveStatus::Optimal &&
      sol.status != milp::SolveStatus::GapLimit) {
    why = "design solve ended " + milp::to_string(sol.status);
    return false;
  }
  if (!(sol.total_cost > 0.0) || !std::isfinite(sol.total_cost)) {
    why = "no usable incumbent at scale";
    return false;
  }
  if (sol.bound > sol.total_cost + 1e-6 * (1.0 + sol.total_cost)) {
    why = "reported bound above the incumbent";
    return false;
  }
  if (secs > 600.0) {
    why = "took " + fmt("%.1f", secs) + "s, budget is 600s";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_sndkit = argv[1];

  struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
  };
  const Criterion criteria[] = {
      {"steady demand: sequential pipeline equals the joint optimum (20 instances)",
       c1_steady_identity},
      {"weekly redesign reference lower-bounds every candidate mapping",
       c2_reference_bound},
      {"closed-form platform split matches optimized block solutions",
       c3_platform_closed_form},
      {"LP and MILP engine agrees with independent oracles (100 + 100 cases)",
       c4_engine_oracles},
      {"autoregression recovers coefficients, clamps at zero, falls back on short history",
       c5_autoregression},
      {"mapping statistics keep order, bounds and volume on 1000 random matrices",
       c6_mapping_properties},
      {"upper-quartile sizing beats mean sizing when surges are costly",
       c7_quartile_beats_mean},
      {"command-line pipeline produces byte-identical files on rerun",
       c8_cli_rerun_identical},
      {"block planning at ~2200 blocks finishes within its budget",
       c9_scale_smoke},
  };

  int failed = 0;
  int idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    std::string why;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = c.fn(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::printf("%s  %d/9  %s  [%.1fs]%s%s\n", ok ? "PASS" : "FAIL", idx, c.name,
                elapsed_s(t0), why.empty() ? "" : " — ", why.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  if (failed == 0)
    std::printf("all 9 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failed);
  return failed == 0 ? 0 : 1;
}
