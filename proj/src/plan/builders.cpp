#include "snd/plan/builders.hpp"

#include <algorithm>
#include <cmath>

#include "snd/core/errors.hpp"

namespace snd::plan {

namespace {

using core::Block;
using core::Instance;
using milp::RowEntry;
using milp::RowSense;
using milp::VarKind;

void check_demand(const Instance& inst, const std::vector<std::int64_t>& y) {
  if (y.size() != inst.commodities.size())
    throw ValidationError("demand vector length does not match the commodity count");
  for (std::int64_t v : y)
    if (v < 0) throw ValidationError("negative periodic demand");
}

// Upper bound on platform counts of one block: everything it admits, paired.
std::int64_t platform_cap(const Block& b,
                          const std::vector<std::int64_t>& y) {
  std::int64_t tot = 0;
  for (int k : b.admissible) tot += y[k];
  return (tot + 1) / 2 + 1;
}

}  // namespace

PlatformCount platform_requirement(std::int64_t n40, std::int64_t n53) {
  if (n40 < 0 || n53 < 0) throw ValidationError("negative container counts");
  PlatformCount p;
  p.v53 = std::max<std::int64_t>(0, (n53 - n40 + 1) / 2);
  const std::int64_t cars = (n53 + n40 + 1) / 2;
  p.v40 = cars - p.v53;
  return p;
}

BlockModel build_bp(const Instance& inst, const std::vector<std::int64_t>& y_p) {
  check_demand(inst, y_p);
  const int nb = static_cast<int>(inst.blocks.size());
  const int nk = static_cast<int>(inst.commodities.size());

  BlockModel bm;
  bm.model.name = inst.name + "-bp";
  bm.index.z.assign(nb, -1);
  bm.index.x.assign(nb, {});
  bm.index.v40.assign(nb, -1);
  bm.index.v53.assign(nb, -1);

  for (const Block& b : inst.blocks) {
    const std::string tag = std::to_string(b.id);
    if (b.artificial)
      bm.index.z[b.id] =
          bm.model.add_var("z_" + tag, 1.0, 1.0, 0.0, VarKind::Integer);
    else
      bm.index.z[b.id] =
          bm.model.add_var("z_" + tag, 0.0, 1.0, b.design_cost, VarKind::Binary);
    bm.model.vars[bm.index.z[b.id]].branch_priority = 2;
  }
  for (const Block& b : inst.blocks) {
    const std::string tag = std::to_string(b.id);
    for (int k : b.admissible) {
      const int var = bm.model.add_var("x_" + tag + "_" + std::to_string(k), 0.0,
                                       static_cast<double>(y_p[k]),
                                       b.flow_cost.at(k), VarKind::Integer);
      bm.model.vars[var].branch_priority = 1;
      bm.index.x[b.id][k] = var;
    }
    if (!b.artificial) {
      const double cap = static_cast<double>(platform_cap(b, y_p));
      bm.index.v40[b.id] = bm.model.add_var("v40_" + tag, 0.0, cap, 0.0, VarKind::Integer);
      bm.index.v53[b.id] = bm.model.add_var("v53_" + tag, 0.0, cap, 0.0, VarKind::Integer);
    }
  }

  // Demand cover, one row per commodity with anything to ship.
  for (int k = 0; k < nk; ++k) {
    if (y_p[k] == 0) continue;
    std::vector<RowEntry> terms;
    for (const Block& b : inst.blocks) {
      auto it = bm.index.x[b.id].find(k);
      if (it != bm.index.x[b.id].end()) terms.push_back({it->second, 1.0});
    }
    bm.model.add_row("dem_" + std::to_string(k), std::move(terms), RowSense::EQ,
                     static_cast<double>(y_p[k]));
  }

  // Linking: no flow on a closed block. The coefficient is the demand itself,
  // deliberately no tighter.
  for (const Block& b : inst.blocks)
    for (auto [k, var] : bm.index.x[b.id]) {
      if (y_p[k] == 0) continue;
      bm.model.add_row("link_" + std::to_string(b.id) + "_" + std::to_string(k),
                       {{var, 1.0}, {bm.index.z[b.id], -static_cast<double>(y_p[k])}},
                       RowSense::LE, 0.0);
    }

  // Platform accounting and train-arc feet, real blocks only.
  for (const Block& b : inst.blocks) {
    if (b.artificial) continue;
    std::vector<RowEntry> long_side{{bm.index.v53[b.id], -2.0}};
    std::vector<RowEntry> total{{bm.index.v40[b.id], -2.0}, {bm.index.v53[b.id], -2.0}};
    for (auto [k, var] : bm.index.x[b.id]) {
      const bool is53 = inst.commodities[k].type == core::ContainerType::C53;
      long_side.push_back({var, is53 ? 1.0 : -1.0});
      total.push_back({var, 1.0});
    }
    bm.model.add_row("p53_" + std::to_string(b.id), std::move(long_side), RowSense::LE,
                     0.0);
    bm.model.add_row("ptot_" + std::to_string(b.id), std::move(total), RowSense::LE, 0.0);
  }

  for (const core::GraphArc& a : inst.graph.arcs) {
    if (a.kind != core::ArcKind::TrainMoving) continue;
    std::vector<RowEntry> terms;
    for (const Block& b : inst.blocks) {
      if (b.artificial) continue;
      if (std::find(b.arcs.begin(), b.arcs.end(), a.id) == b.arcs.end()) continue;
      terms.push_back({bm.index.v40[b.id], inst.params.l40});
      terms.push_back({bm.index.v53[b.id], inst.params.l53});
    }
    if (terms.empty()) continue;
    bm.model.add_row("cap_" + std::to_string(a.id), std::move(terms), RowSense::LE,
                     a.capacity_feet);
  }

  bm.model.validate();
  return bm;
}

BlockModel build_wbp(const Instance& inst, const std::vector<std::int64_t>& y_week,
                     const std::vector<char>& built) {
  check_demand(inst, y_week);
  if (built.size() != inst.blocks.size())
    throw ValidationError("design vector length does not match the block count");
  const int nk = static_cast<int>(inst.commodities.size());

  BlockModel bm;
  bm.model.name = inst.name + "-wbp";
  const int nb = static_cast<int>(inst.blocks.size());
  bm.index.z.assign(nb, -1);
  bm.index.x.assign(nb, {});
  bm.index.v40.assign(nb, -1);
  bm.index.v53.assign(nb, -1);

  auto open = [&](const Block& b) { return b.artificial || built[b.id]; };

  for (const Block& b : inst.blocks) {
    if (!open(b)) continue;
    const std::string tag = std::to_string(b.id);
    for (int k : b.admissible) {
      const int var = bm.model.add_var("x_" + tag + "_" + std::to_string(k), 0.0,
                                       static_cast<double>(y_week[k]),
                                       b.flow_cost.at(k), VarKind::Integer);
      bm.model.vars[var].branch_priority = 1;
      bm.index.x[b.id][k] = var;
    }
    if (!b.artificial) {
      const double cap = static_cast<double>(platform_cap(b, y_week));
      bm.index.v40[b.id] = bm.model.add_var("v40_" + tag, 0.0, cap, 0.0, VarKind::Integer);
      bm.index.v53[b.id] = bm.model.add_var("v53_" + tag, 0.0, cap, 0.0, VarKind::Integer);
    }
  }

  for (int k = 0; k < nk; ++k) {
    if (y_week[k] == 0) continue;
    std::vector<RowEntry> terms;
    for (const Block& b : inst.blocks) {
      auto it = bm.index.x[b.id].find(k);
      if (it != bm.index.x[b.id].end()) terms.push_back({it->second, 1.0});
    }
    bm.model.add_row("dem_" + std::to_string(k), std::move(terms), RowSense::EQ,
                     static_cast<double>(y_week[k]));
  }

  for (const Block& b : inst.blocks) {
    if (b.artificial || !built[b.id]) continue;
    std::vector<RowEntry> long_side{{bm.index.v53[b.id], -2.0}};
    std::vector<RowEntry> total{{bm.index.v40[b.id], -2.0}, {bm.index.v53[b.id], -2.0}};
    for (auto [k, var] : bm.index.x[b.id]) {
      const bool is53 = inst.commodities[k].type == core::ContainerType::C53;
      long_side.push_back({var, is53 ? 1.0 : -1.0});
      total.push_back({var, 1.0});
    }
    bm.model.add_row("p53_" + std::to_string(b.id), std::move(long_side), RowSense::LE,
                     0.0);
    bm.model.add_row("ptot_" + std::to_string(b.id), std::move(total), RowSense::LE, 0.0);
  }

  for (const core::GraphArc& a : inst.graph.arcs) {
    if (a.kind != core::ArcKind::TrainMoving) continue;
    std::vector<RowEntry> terms;
    for (const Block& b : inst.blocks) {
      if (b.artificial || !built[b.id]) continue;
      if (std::find(b.arcs.begin(), b.arcs.end(), a.id) == b.arcs.end()) continue;
      terms.push_back({bm.index.v40[b.id], inst.params.l40});
      terms.push_back({bm.index.v53[b.id], inst.params.l53});
    }
    if (terms.empty()) continue;
    bm.model.add_row("cap_" + std::to_string(a.id), std::move(terms), RowSense::LE,
                     a.capacity_feet);
  }

  bm.model.validate();
  return bm;
}

BlockModel build_mcnd(const Instance& inst, const std::vector<std::int64_t>& y_p) {
  check_demand(inst, y_p);
  const int nk = static_cast<int>(inst.commodities.size());
  const int nb = static_cast<int>(inst.blocks.size());

  BlockModel bm;
  bm.model.name = inst.name + "-mcnd";
  bm.index.z.assign(nb, -1);
  bm.index.x.assign(nb, {});
  bm.index.v40.assign(nb, -1);
  bm.index.v53.assign(nb, -1);

  for (const Block& b : inst.blocks) {
    const std::string tag = std::to_string(b.id);
    if (b.artificial)
      bm.index.z[b.id] = bm.model.add_var("z_" + tag, 1.0, 1.0, 0.0, VarKind::Integer);
    else
      bm.index.z[b.id] =
          bm.model.add_var("z_" + tag, 0.0, 1.0, b.design_cost, VarKind::Binary);
    bm.model.vars[bm.index.z[b.id]].branch_priority = 2;
  }
  for (const Block& b : inst.blocks) {
    const std::string tag = std::to_string(b.id);
    for (int k : b.admissible) {
      const int var = bm.model.add_var("x_" + tag + "_" + std::to_string(k), 0.0,
                                       static_cast<double>(y_p[k]),
                                       b.flow_cost.at(k), VarKind::Integer);
      bm.model.vars[var].branch_priority = 1;
      bm.index.x[b.id][k] = var;
    }
  }

  for (int k = 0; k < nk; ++k) {
    if (y_p[k] == 0) continue;
    std::vector<RowEntry> terms;
    for (const Block& b : inst.blocks) {
      auto it = bm.index.x[b.id].find(k);
      if (it != bm.index.x[b.id].end()) terms.push_back({it->second, 1.0});
    }
    bm.model.add_row("dem_" + std::to_string(k), std::move(terms), RowSense::EQ,
                     static_cast<double>(y_p[k]));
  }

  // One aggregate cap per block stands in for platform accounting.
  for (const Block& b : inst.blocks) {
    std::int64_t cap = 0;
    if (b.artificial) {
      for (int k : b.admissible) cap += y_p[k];
    } else {
      double feet = milp::kInf;
      for (int a : b.arcs)
        if (inst.graph.arcs[a].kind == core::ArcKind::TrainMoving)
          feet = std::min(feet, inst.graph.arcs[a].capacity_feet);
      if (!std::isfinite(feet))
        throw ValidationError("block " + std::to_string(b.id) +
                              " crosses no train arc; cannot derive a cap");
      cap = static_cast<std::int64_t>(std::floor(2.0 * feet / inst.params.l53));
    }
    std::vector<RowEntry> terms;
    for (auto [k, var] : bm.index.x[b.id]) terms.push_back({var, 1.0});
    terms.push_back({bm.index.z[b.id], -static_cast<double>(cap)});
    bm.model.add_row("cap_" + std::to_string(b.id), std::move(terms), RowSense::LE, 0.0);
  }

  bm.model.validate();
  return bm;
}

}  // namespace snd::plan
