#include "snd/plan/plan_io.hpp"

#include "snd/core/errors.hpp"
#include "snd/core/instance_io.hpp"

namespace snd::plan {

namespace {

using nlohmann::ordered_json;

milp::SolveStatus status_from_string(const std::string& s) {
  if (s == "optimal") return milp::SolveStatus::Optimal;
  if (s == "infeasible") return milp::SolveStatus::Infeasible;
  if (s == "unbounded") return milp::SolveStatus::Unbounded;
  if (s == "gap_limit") return milp::SolveStatus::GapLimit;
  throw ValidationError("unknown solve status '" + s + "'");
}

ordered_json week_to_json(const WeekFlows& w) {
  ordered_json flows = ordered_json::array();
  for (std::size_t b = 0; b < w.flows.size(); ++b)
    for (auto [k, n] : w.flows[b])
      flows.push_back({{"block", b}, {"commodity", k}, {"containers", n}});
  ordered_json platforms = ordered_json::array();
  for (std::size_t b = 0; b < w.platforms.size(); ++b)
    if (w.platforms[b].v40 != 0 || w.platforms[b].v53 != 0)
      platforms.push_back(
          {{"block", b}, {"v40", w.platforms[b].v40}, {"v53", w.platforms[b].v53}});
  return ordered_json{
      {"flows", std::move(flows)}, {"platforms", std::move(platforms)},
      {"flow_cost", w.flow_cost}};
}

WeekFlows week_from_json(const ordered_json& j, std::size_t blocks) {
  WeekFlows w;
  w.flows.resize(blocks);
  w.platforms.resize(blocks);
  for (const auto& f : j.at("flows"))
    w.flows.at(f.at("block").get<std::size_t>())[f.at("commodity").get<int>()] =
        f.at("containers").get<std::int64_t>();
  for (const auto& p : j.at("platforms")) {
    auto& slot = w.platforms.at(p.at("block").get<std::size_t>());
    slot.v40 = p.at("v40").get<std::int64_t>();
    slot.v53 = p.at("v53").get<std::int64_t>();
  }
  w.flow_cost = j.at("flow_cost").get<double>();
  return w;
}

}  // namespace

nlohmann::ordered_json plan_to_json(const TacticalPlan& p) {
  ordered_json j;
  j["periodic_demand"] = p.periodic_demand;
  j["built"] = ordered_json::array();
  for (char b : p.built) j["built"].push_back(b ? 1 : 0);
  j["design_cost_per_week"] = p.design_cost_per_week;
  j["weeks"] = ordered_json::array();
  for (const WeekFlows& w : p.weeks) j["weeks"].push_back(week_to_json(w));
  j["flow_cost_total"] = p.flow_cost_total;
  j["total_cost"] = p.total_cost;
  j["design_status"] = milp::to_string(p.design_status);
  j["design_bound"] = p.design_bound;
  j["nodes"] = p.nodes;
  return j;
}

TacticalPlan plan_from_json(const nlohmann::ordered_json& j) {
  TacticalPlan p;
  try {
    p.periodic_demand = j.at("periodic_demand").get<std::vector<std::int64_t>>();
    for (const auto& b : j.at("built")) p.built.push_back(b.get<int>() ? 1 : 0);
    p.design_cost_per_week = j.at("design_cost_per_week").get<double>();
    for (const auto& w : j.at("weeks"))
      p.weeks.push_back(week_from_json(w, p.built.size()));
    p.flow_cost_total = j.at("flow_cost_total").get<double>();
    p.total_cost = j.at("total_cost").get<double>();
    p.design_status = status_from_string(j.at("design_status").get<std::string>());
    p.design_bound = j.at("design_bound").get<double>();
    p.nodes = j.at("nodes").get<long>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("plan JSON is malformed: ") + e.what());
  }
  return p;
}

void save_plan(const std::string& path, const TacticalPlan& p) {
  core::write_json_file(path, plan_to_json(p));
}

TacticalPlan load_plan(const std::string& path) {
  return plan_from_json(core::parse_json_file(path));
}

}  // namespace snd::plan
