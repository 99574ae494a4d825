#ifndef SND_PLAN_BUILDERS_HPP
#define SND_PLAN_BUILDERS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "snd/core/instance.hpp"
#include "snd/milp/model.hpp"

namespace snd::plan {

// Column map from model variables back to their meaning. Missing entries
// (never created) are -1 / absent.
struct BlockVarIndex {
  std::vector<int> z;                      // per block; artificial fixed at [1,1]
  std::vector<std::map<int, int>> x;       // per block: commodity -> var
  std::vector<int> v40, v53;               // per block; -1 for artificial/unbuilt
};

struct BlockModel {
  milp::MilpModel model;
  BlockVarIndex index;
};

// Design + flow + platform model for one periodic demand vector. Every unit
// of demand must ride an open block or the lane's artificial block; platform
// variables count the cars each block needs, and train arcs cap the feet the
// blocks crossing them may occupy together.
BlockModel build_bp(const core::Instance& inst, const std::vector<std::int64_t>& y_p);

// One week of flows under a frozen design: no design variables, flow and
// platform variables exist only for built blocks (artificial blocks always
// count as built). The objective carries flow cost only.
BlockModel build_wbp(const core::Instance& inst, const std::vector<std::int64_t>& y_week,
                     const std::vector<char>& built);

// Classic capacitated design relaxation: one aggregate container cap per
// block instead of platform accounting. Real blocks cap at the containers
// their tightest train arc could carry if everything were long boxes;
// artificial blocks cap at the total demand they admit.
BlockModel build_mcnd(const core::Instance& inst, const std::vector<std::int64_t>& y_p);

// Feet-minimal integer platform split for a mixed load: the fewest long cars
// that satisfy 2*v53 >= n53 - n40, then the fewest cars overall.
struct PlatformCount {
  std::int64_t v40 = 0;
  std::int64_t v53 = 0;
};
PlatformCount platform_requirement(std::int64_t n40, std::int64_t n53);

}  // namespace snd::plan

#endif
