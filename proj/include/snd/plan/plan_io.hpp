#ifndef SND_PLAN_PLAN_IO_HPP
#define SND_PLAN_PLAN_IO_HPP

#include <json.hpp>

#include <string>

#include "snd/plan/solve.hpp"

namespace snd::plan {

nlohmann::ordered_json plan_to_json(const TacticalPlan& p);
TacticalPlan plan_from_json(const nlohmann::ordered_json& j);
void save_plan(const std::string& path, const TacticalPlan& p);
TacticalPlan load_plan(const std::string& path);

}  // namespace snd::plan

#endif
