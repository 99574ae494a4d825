#include "snd/core/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include "snd/core/aggregate.hpp"
#include "snd/core/errors.hpp"
#include "snd/core/win_transform.hpp"

namespace snd::core {

namespace {

// Roughly CN-like weekday mix: weekdays busy, weekend light. Sums to 6.
constexpr double kWeekdayWeight[7] = {1.2, 1.1, 1.0, 1.0, 1.1, 0.4, 0.2};

struct OdLane {
  int origin = 0;
  int destination = 0;
  std::vector<int> commodities;
};

}  // namespace

SyntheticOutput generate_synthetic(const SyntheticConfig& cfg) {
  using namespace std::chrono;
  if (cfg.terminals < 2) throw ValidationError("need at least two terminals");
  if (cfg.commodities < 1) throw ValidationError("need at least one commodity");
  if (cfg.commodities_per_od < 1) throw ValidationError("commodities_per_od must be positive");
  if (cfg.trains_per_week < 1) throw ValidationError("need at least one departure per week");
  if (cfg.horizon_weeks < 1) throw ValidationError("horizon must cover at least one week");
  if (cfg.history_weeks < 0) throw ValidationError("history cannot be negative");
  if (!(cfg.capacity_tightness > 0.0))
    throw ValidationError("capacity tightness must be positive");

  const int m = cfg.terminals;
  const int k = cfg.commodities;
  std::mt19937_64 rng(cfg.seed);

  SyntheticOutput out;
  Instance& inst = out.instance;
  inst.name = "synthetic-" + std::to_string(cfg.seed);
  inst.params.horizon_weeks = cfg.horizon_weeks;

  // Commodities cycle over the ordered terminal pairs; consecutive commodities
  // on the same lane alternate container families so blocks see both.
  std::vector<OdLane> lanes;
  std::map<std::pair<int, int>, int> lane_of;
  for (int c = 0; c < k; ++c) {
    const int lane_index = c / cfg.commodities_per_od;
    const int pair_index = lane_index % (m * (m - 1));
    const int origin = pair_index / (m - 1);
    int dest = pair_index % (m - 1);
    if (dest >= origin) ++dest;
    Commodity com;
    com.id = c;
    com.origin = "T" + std::to_string(origin);
    com.destination = "T" + std::to_string(dest);
    com.type = (c % 2 == 0) ? ContainerType::C40 : ContainerType::C53;
    inst.commodities.push_back(com);
    auto [it, fresh] = lane_of.try_emplace({origin, dest}, static_cast<int>(lanes.size()));
    if (fresh) lanes.push_back(OdLane{origin, dest, {}});
    lanes[it->second].commodities.push_back(c);
  }

  // Demand first: train capacities are calibrated against it below.
  std::vector<double> level(k), phase(k);
  for (int c = 0; c < k; ++c) {
    level[c] = cfg.base_weekly_demand * std::uniform_real_distribution<>(0.5, 1.5)(rng);
    phase[c] = std::uniform_real_distribution<>(0.0, 2.0 * std::numbers::pi)(rng);
  }

  const sys_days start = sys_days{year{2019} / January / day{7}};  // a Monday
  if (weekday{start} != Monday) throw SolverError("anchor date is not a Monday");
  const int total_days = (cfg.history_weeks + cfg.horizon_weeks) * 7;
  out.history_start = year_month_day{start};
  out.horizon_start = year_month_day{start + days{cfg.history_weeks * 7}};

  std::normal_distribution<> gauss(0.0, 1.0);
  std::uniform_real_distribution<> unit(0.0, 1.0);
  std::vector<DailyDemandRecord> all;
  all.reserve(static_cast<std::size_t>(total_days) * k);
  for (int d = 0; d < total_days; ++d) {
    const year_month_day date{start + days{d}};
    for (int c = 0; c < k; ++c) {
      const double season =
          1.0 + cfg.seasonal_amplitude *
                    std::sin(2.0 * std::numbers::pi * (d / 364.0) + phase[c]);
      const double drift = 1.0 + cfg.trend * (static_cast<double>(d) / total_days);
      double v = level[c] / 6.0 * kWeekdayWeight[d % 7] * season * drift;
      v *= 1.0 + cfg.noise_level * gauss(rng);
      if (unit(rng) < cfg.spike_probability) v *= cfg.spike_multiplier;
      DailyDemandRecord rec;
      rec.date = date;
      rec.commodity_id = c;
      rec.count = static_cast<double>(round_half_up(std::max(0.0, v)));
      all.push_back(rec);
    }
  }

  const PeriodAggregate agg = aggregate_to_periods(all, k);
  if (agg.matrix.periods != cfg.history_weeks + cfg.horizon_weeks)
    throw SolverError("generated span did not aggregate to the expected week count");
  out.history = DemandMatrix(cfg.history_weeks, k);
  out.horizon = DemandMatrix(cfg.horizon_weeks, k);
  for (int t = 0; t < agg.matrix.periods; ++t)
    for (int c = 0; c < k; ++c) {
      if (t < cfg.history_weeks)
        out.history.at(t, c) = agg.matrix.at(t, c);
      else
        out.horizon.at(t - cfg.history_weeks, c) = agg.matrix.at(t, c);
    }
  const auto split = all.begin() + static_cast<std::ptrdiff_t>(cfg.history_weeks) * 7 * k;
  out.history_daily.assign(all.begin(), split);
  out.horizon_daily.assign(split, all.end());

  // Mean weekly feet over each ring corridor, used to size the trains.
  std::vector<double> corridor_feet(m, 0.0);
  const double mean_weeks = cfg.history_weeks + cfg.horizon_weeks;
  for (const OdLane& lane : lanes) {
    const int h = (lane.destination - lane.origin + m) % m;
    double lane_feet = 0.0;
    for (int c : lane.commodities) {
      std::int64_t tot = 0;
      for (int t = 0; t < agg.matrix.periods; ++t) tot += agg.matrix.at(t, c);
      const double per_week = mean_weeks > 0 ? tot / mean_weeks : 0.0;
      const double feet_per_container =
          (inst.commodities[c].type == ContainerType::C53 ? inst.params.l53
                                                          : inst.params.l40) /
          2.0;
      lane_feet += per_week * feet_per_container;
    }
    for (int s = 0; s < h; ++s) corridor_feet[(lane.origin + s) % m] += lane_feet;
  }

  // Space-time skeleton: 2 DINs, departure columns, one sink per terminal.
  const int slots = cfg.trains_per_week + m + 1;
  SpaceTimeGraph& g = inst.graph;
  std::vector<std::vector<int>> din(m), column(m);
  std::vector<int> sink(m);
  for (int t = 0; t < m; ++t) {
    const std::string tag = "T" + std::to_string(t);
    din[t].push_back(g.add_node(NodeKind::Din, tag, -1, "DIN_" + tag + "_a"));
    din[t].push_back(g.add_node(NodeKind::Din, tag, -1, "DIN_" + tag + "_b"));
    column[t].resize(slots + 1);
    for (int s = 0; s <= slots; ++s)
      column[t][s] = g.add_node(NodeKind::TrainEvent, tag, s,
                                tag + "@" + std::to_string(s));
    sink[t] = g.add_node(NodeKind::Sink, tag, -1, "SINK_" + tag);
  }

  std::map<std::pair<int, int>, int> din_entry, train_arc, sink_arc;
  for (int t = 0; t < m; ++t) {
    for (int i = 0; i < 2; ++i)
      for (int s = 0; s < slots; ++s)
        din_entry[{din[t][i], s}] = g.add_arc(din[t][i], column[t][s], ArcKind::Waiting);
    for (int s = 0; s < slots; ++s)
      g.add_arc(column[t][s], column[t][s + 1], ArcKind::Waiting);
    for (int s = 1; s <= slots; ++s)
      sink_arc[{t, s}] = g.add_arc(column[t][s], sink[t], ArcKind::Other);
  }
  for (int c = 0; c < m; ++c) {
    const double cap = std::max(
        inst.params.l53,
        cfg.capacity_tightness * corridor_feet[c] / cfg.trains_per_week);
    for (int s = 0; s < slots; ++s)
      train_arc[{c, s}] =
          g.add_arc(column[c][s], column[(c + 1) % m][s + 1], ArcKind::TrainMoving, cap);
  }

  std::vector<std::vector<int>> win_split(m);
  {
    const auto before_arcs = g.arcs.size();
    apply_win_transform(g);
    for (auto i = before_arcs; i < g.arcs.size(); ++i) {
      const GraphArc& a = g.arcs[i];
      win_split[std::stoi(g.nodes[a.tail].terminal.substr(1))].push_back(a.id);
    }
  }
  for (int t = 0; t < m; ++t) {
    const std::string tag = "T" + std::to_string(t);
    const int src = g.add_node(NodeKind::Other, tag, -1, "SRC_" + tag);
    g.add_arc(src, *g.win_node_of(tag), ArcKind::DemandIn);
  }
  g.validate();

  // One block per departure slot and lane, plus the artificial lane block.
  for (const OdLane& lane : lanes) {
    const int h = (lane.destination - lane.origin + m) % m;
    for (int s0 = 0; s0 < cfg.trains_per_week; ++s0) {
      Block b;
      b.id = static_cast<int>(inst.blocks.size());
      const int entry_din = din[lane.origin][s0 % 2];
      b.arcs.push_back(win_split[lane.origin][s0 % 2]);
      b.arcs.push_back(din_entry.at({entry_din, s0}));
      for (int step = 0; step < h; ++step)
        b.arcs.push_back(train_arc.at({(lane.origin + step) % m, s0 + step}));
      b.arcs.push_back(sink_arc.at({lane.destination, s0 + h}));
      b.design_cost =
          cfg.cost_scale * h * std::uniform_real_distribution<>(35.0, 65.0)(rng);
      b.admissible = lane.commodities;
      std::sort(b.admissible.begin(), b.admissible.end());
      for (int c : b.admissible) {
        const double family = inst.commodities[c].type == ContainerType::C53 ? 1.15 : 1.0;
        b.flow_cost[c] = cfg.cost_scale * h * family *
                         std::uniform_real_distribution<>(0.8, 1.2)(rng);
      }
      inst.blocks.push_back(std::move(b));
    }
    Block art;
    art.id = static_cast<int>(inst.blocks.size());
    art.artificial = true;
    art.admissible = lane.commodities;
    std::sort(art.admissible.begin(), art.admissible.end());
    for (int c : art.admissible)
      art.flow_cost[c] =
          cfg.cost_scale * std::max(1, h) * std::uniform_real_distribution<>(3.5, 5.5)(rng);
    inst.blocks.push_back(std::move(art));
  }

  inst.validate();
  return out;
}

}  // namespace snd::core
