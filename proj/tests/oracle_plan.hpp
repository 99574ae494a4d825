// Independent yardstick for the block-planning solves: exhaustive enumeration
// over designs and integer flow splits, with platform counts found by brute
// force search instead of any closed form. Shares only the instance types
// with the code under test.
#ifndef TESTS_ORACLE_PLAN_HPP
#define TESTS_ORACLE_PLAN_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "snd/core/instance.hpp"

namespace plan_oracle {

constexpr double kInfCost = std::numeric_limits<double>::infinity();

// Smallest feet that carry n40 short and n53 long containers, found by trying
// every car split that satisfies the two counting rules.
inline double oracle_platform_feet(std::int64_t n40, std::int64_t n53, double l40,
                                   double l53, std::int64_t* out40 = nullptr,
                                   std::int64_t* out53 = nullptr) {
  const std::int64_t most = n40 + n53 + 2;
  double best = kInfCost;
  for (std::int64_t v53 = 0; v53 <= most; ++v53)
    for (std::int64_t v40 = 0; v40 <= most; ++v40) {
      if (2 * v53 < n53 - n40) continue;
      if (2 * (v40 + v53) < n40 + n53) continue;
      const double feet = l40 * v40 + l53 * v53;
      if (feet < best) {
        best = feet;
        if (out40) *out40 = v40;
        if (out53) *out53 = v53;
      }
    }
  return best;
}

namespace detail {

struct FlowState {
  const snd::core::Instance* inst = nullptr;
  std::vector<int> commodities;                 // those with demand
  std::vector<std::vector<int>> usable;         // per commodity: open block ids
  std::vector<std::map<int, std::int64_t>> x;   // per block: commodity -> count
  double cost = 0.0;
  double best = kInfCost;
  std::vector<std::map<int, std::int64_t>>* best_x = nullptr;
};

inline bool leaf_fits(FlowState& s) {
  const auto& inst = *s.inst;
  std::vector<double> feet(inst.blocks.size(), 0.0);
  for (const auto& b : inst.blocks) {
    if (b.artificial) continue;
    std::int64_t n40 = 0, n53 = 0;
    for (auto [k, n] : s.x[b.id])
      (inst.commodities[k].type == snd::core::ContainerType::C53 ? n53 : n40) += n;
    if (n40 + n53 == 0) continue;
    feet[b.id] = oracle_platform_feet(n40, n53, inst.params.l40, inst.params.l53);
  }
  for (const auto& a : inst.graph.arcs) {
    if (a.kind != snd::core::ArcKind::TrainMoving) continue;
    double used = 0.0;
    for (const auto& b : inst.blocks) {
      if (b.artificial || feet[b.id] == 0.0) continue;
      if (std::find(b.arcs.begin(), b.arcs.end(), a.id) != b.arcs.end())
        used += feet[b.id];
    }
    if (used > a.capacity_feet + 1e-9) return false;
  }
  return true;
}

inline void assign(FlowState& s, std::size_t ci, std::size_t bi, std::int64_t left,
                   const std::vector<std::int64_t>& y) {
  if (s.cost >= s.best) return;  // flows only add cost
  if (ci == s.commodities.size()) {
    if (leaf_fits(s)) {
      s.best = s.cost;
      if (s.best_x) *s.best_x = s.x;
    }
    return;
  }
  const int k = s.commodities[ci];
  const auto& blocks = s.usable[ci];
  if (bi + 1 == blocks.size()) {
    // Last admissible block takes the remainder.
    const int b = blocks[bi];
    const double c = s.inst->blocks[b].flow_cost.at(k) * left;
    if (left > 0) s.x[b][k] = left;
    s.cost += c;
    assign(s, ci + 1, 0, ci + 1 < s.commodities.size() ? y[s.commodities[ci + 1]] : 0, y);
    s.cost -= c;
    if (left > 0) s.x[b].erase(k);
    return;
  }
  for (std::int64_t take = 0; take <= left; ++take) {
    const int b = blocks[bi];
    const double c = s.inst->blocks[b].flow_cost.at(k) * take;
    if (take > 0) s.x[b][k] = take;
    s.cost += c;
    assign(s, ci, bi + 1, left - take, y);
    s.cost -= c;
    if (take > 0) s.x[b].erase(k);
  }
}

}  // namespace detail

// Cheapest integer flow of one week's demand over the open blocks, or +inf
// when no split fits the trains. Artificial blocks are always open.
inline double min_flow_cost(const snd::core::Instance& inst,
                            const std::vector<std::int64_t>& y,
                            const std::vector<char>& built,
                            std::vector<std::map<int, std::int64_t>>* flows = nullptr) {
  detail::FlowState s;
  s.inst = &inst;
  s.x.resize(inst.blocks.size());
  s.best_x = flows;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k] == 0) continue;
    s.commodities.push_back(static_cast<int>(k));
    std::vector<int> open;
    for (const auto& b : inst.blocks) {
      if (!b.artificial && !built[b.id]) continue;
      if (std::binary_search(b.admissible.begin(), b.admissible.end(),
                             static_cast<int>(k)))
        open.push_back(b.id);
    }
    if (open.empty()) return kInfCost;
    s.usable.push_back(std::move(open));
  }
  if (s.commodities.empty()) return 0.0;
  detail::assign(s, 0, 0, y[s.commodities[0]], y);
  return s.best;
}

struct DesignScan {
  double cost = kInfCost;        // best total over all designs
  double runner_up = kInfCost;   // best total among other designs
  std::vector<char> built;
};

// Joint optimum: open any subset of real blocks once, pay its design every
// week, re-split flows each week. Exhaustive over all 2^R designs.
inline DesignScan best_total(const snd::core::Instance& inst,
                             const snd::core::DemandMatrix& weekly) {
  std::vector<int> real;
  for (const auto& b : inst.blocks)
    if (!b.artificial) real.push_back(b.id);
  DesignScan scan;
  for (std::uint64_t mask = 0; mask < (1ull << real.size()); ++mask) {
    std::vector<char> built(inst.blocks.size(), 0);
    double design = 0.0;
    for (std::size_t i = 0; i < real.size(); ++i)
      if (mask & (1ull << i)) {
        built[real[i]] = 1;
        design += inst.blocks[real[i]].design_cost;
      }
    for (const auto& b : inst.blocks)
      if (b.artificial) built[b.id] = 1;
    double total = design * weekly.periods;
    for (int t = 0; t < weekly.periods && total < kInfCost; ++t) {
      const double f = min_flow_cost(inst, weekly.row(t), built);
      total = f == kInfCost ? kInfCost : total + f;
    }
    if (total < scan.cost) {
      scan.runner_up = scan.cost;
      scan.cost = total;
      scan.built = built;
    } else if (total < scan.runner_up) {
      scan.runner_up = total;
    }
  }
  return scan;
}

}  // namespace plan_oracle

#endif
