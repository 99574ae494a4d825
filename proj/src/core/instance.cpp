#include "snd/core/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "snd/core/errors.hpp"

namespace snd::core {

void Instance::validate() const {
  if (!(params.l40 > 0.0) || !(params.l53 > params.l40))
    throw ValidationError("platform feet must satisfy l53 > l40 > 0");
  if (params.horizon_weeks < 1) throw ValidationError("horizon must cover at least one period");
  if (params.period_days < 1) throw ValidationError("period must cover at least one day");

  graph.validate();

  const int k = static_cast<int>(commodities.size());
  if (k == 0) throw ValidationError("instance has no commodities");
  for (int i = 0; i < k; ++i) {
    commodities[i].validate();
    if (commodities[i].id != i)
      throw ValidationError("commodity id " + std::to_string(commodities[i].id) +
                            " does not match its position " + std::to_string(i));
  }

  std::vector<char> covered(k, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Block& blk = blocks[b];
    if (blk.id != static_cast<int>(b))
      throw ValidationError("block id " + std::to_string(blk.id) +
                            " does not match its position " + std::to_string(b));
    if (blk.artificial) {
      if (!blk.arcs.empty())
        throw ValidationError("artificial block " + std::to_string(blk.id) + " carries a path");
      if (blk.design_cost != 0.0)
        throw ValidationError("artificial block " + std::to_string(blk.id) +
                              " must have zero design cost");
    } else {
      if (blk.arcs.empty())
        throw ValidationError("block " + std::to_string(blk.id) + " has an empty path");
      for (std::size_t i = 0; i < blk.arcs.size(); ++i) {
        const int a = blk.arcs[i];
        if (a < 0 || a >= static_cast<int>(graph.arcs.size()))
          throw ValidationError("block " + std::to_string(blk.id) +
                                " references missing arc " + std::to_string(a));
        if (i > 0 && graph.arcs[blk.arcs[i - 1]].head != graph.arcs[a].tail)
          throw ValidationError("block " + std::to_string(blk.id) +
                                " path is not arc-connected");
      }
    }
    if (!std::isfinite(blk.design_cost) || blk.design_cost < 0.0)
      throw ValidationError("block " + std::to_string(blk.id) + " has a bad design cost");
    if (blk.admissible.empty())
      throw ValidationError("block " + std::to_string(blk.id) + " admits no commodity");
    if (!std::is_sorted(blk.admissible.begin(), blk.admissible.end()))
      throw ValidationError("block " + std::to_string(blk.id) +
                            " admissible list is not sorted");
    int prev = -1;
    for (int c : blk.admissible) {
      if (c < 0 || c >= k)
        throw ValidationError("block " + std::to_string(blk.id) +
                              " admits missing commodity " + std::to_string(c));
      if (c == prev)
        throw ValidationError("block " + std::to_string(blk.id) +
                              " admits commodity " + std::to_string(c) + " twice");
      prev = c;
      auto it = blk.flow_cost.find(c);
      if (it == blk.flow_cost.end())
        throw ValidationError("block " + std::to_string(blk.id) +
                              " lacks a flow cost for commodity " + std::to_string(c));
      if (!std::isfinite(it->second) || it->second < 0.0)
        throw ValidationError("block " + std::to_string(blk.id) +
                              " has a bad flow cost for commodity " + std::to_string(c));
      if (blk.artificial) covered[c] = 1;
    }
  }
  for (int c = 0; c < k; ++c)
    if (!covered[c])
      throw ValidationError("commodity " + std::to_string(c) +
                            " has no artificial block; demand could become infeasible");
}

std::vector<int> Instance::blocks_for(int commodity) const {
  std::vector<int> out;
  for (const Block& blk : blocks)
    if (std::binary_search(blk.admissible.begin(), blk.admissible.end(), commodity))
      out.push_back(blk.id);
  return out;
}

}  // namespace snd::core
