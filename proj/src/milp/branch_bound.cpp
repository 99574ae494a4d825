#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>
#include <vector>

#include "snd/milp/model.hpp"
#include "snd/milp/simplex_internal.hpp"

namespace snd::milp {

namespace {

struct BoundChange {
  int var = -1;
  bool is_upper = false;
  double value = 0.0;
  std::shared_ptr<BoundChange> parent;
};

struct Node {
  std::shared_ptr<BoundChange> chain;
  double bound = -kInf;  // parent LP objective
  long seq = 0;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;  // min-heap on bound
    return a.seq > b.seq;
  }
};

void materialize(const MilpModel& model, const std::shared_ptr<BoundChange>& chain,
                 std::vector<double>& lo, std::vector<double>& hi) {
  for (std::size_t j = 0; j < model.vars.size(); ++j) {
    lo[j] = model.vars[j].lower;
    hi[j] = model.vars[j].upper;
  }
  for (const BoundChange* c = chain.get(); c; c = c->parent.get()) {
    if (c->is_upper)
      hi[c->var] = std::min(hi[c->var], c->value);
    else
      lo[c->var] = std::max(lo[c->var], c->value);
  }
}

}  // namespace

MilpSolution solve_milp(const MilpModel& model, const SolveOptions& opts) {
  detail::StandardForm sf = detail::standardize(model);
  std::vector<int> int_vars;
  for (std::size_t j = 0; j < model.vars.size(); ++j)
    if (model.vars[j].kind != VarKind::Continuous) int_vars.push_back(static_cast<int>(j));

  MilpSolution out;
  out.status = SolveStatus::Infeasible;

  if (opts.warm_start) {
    const auto& ws = *opts.warm_start;
    if (ws.size() == model.vars.size() &&
        model.max_violation(ws, true) <= std::max(opts.feas_tol, opts.int_tol)) {
      out.has_solution = true;
      out.values = ws;
      out.objective = model.objective_value(ws);
    }
  }

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  long seq = 0;
  bool diving = true;
  Node current{nullptr, -kInf, seq++};
  std::vector<double> lo(model.vars.size()), hi(model.vars.size());
  double root_bound = -kInf;
  bool root_solved = false;

  auto incumbent_cut = [&]() {
    return out.has_solution ? out.objective - 1e-9 * std::max(1.0, std::fabs(out.objective))
                            : kInf;
  };
  auto global_bound = [&](bool have_current, double current_bound) {
    double g = kInf;
    if (!open.empty()) g = std::min(g, open.top().bound);
    if (have_current) g = std::min(g, current_bound);
    if (g == kInf) g = out.has_solution ? out.objective : root_bound;
    return g;
  };

  while (true) {
    if (!diving) {
      bool found = false;
      while (!open.empty()) {
        current = open.top();
        open.pop();
        if (current.bound < incumbent_cut()) {
          found = true;
          break;
        }
      }
      if (!found) break;
      diving = true;
    }

    materialize(model, current.chain, lo, hi);
    bool bounds_ok = true;
    for (std::size_t j = 0; j < lo.size() && bounds_ok; ++j)
      if (lo[j] > hi[j] + 1e-12) bounds_ok = false;
    if (!bounds_ok) {
      diving = false;
      continue;
    }

    detail::LpResult lp = detail::lp_solve_bounded(sf, lo, hi, opts);
    ++out.nodes_explored;
    out.lp_iterations += lp.iterations;

    if (lp.status == SolveStatus::Unbounded) {
      if (!root_solved) {
        out.status = SolveStatus::Unbounded;
        return out;
      }
      // A tightened node cannot be unbounded if the root was bounded.
      diving = false;
      continue;
    }
    if (!root_solved) {
      root_solved = true;
      root_bound = lp.status == SolveStatus::Optimal ? lp.objective : kInf;
    }
    if (lp.status != SolveStatus::Optimal || lp.objective >= incumbent_cut()) {
      diving = false;
    } else {
      int branch_var = -1, best_prio = 0;
      double branch_val = 0.0, best_frac = opts.int_tol;
      for (int j : int_vars) {
        double v = lp.x[j];
        double frac = std::fabs(v - std::round(v));
        double score = std::min(v - std::floor(v), std::ceil(v) - v);
        if (frac <= opts.int_tol) continue;
        const int prio = model.vars[j].branch_priority;
        // Higher priority classes branch first; within a class, most fractional.
        if (branch_var >= 0 && prio < best_prio) continue;
        if (branch_var < 0 || prio > best_prio || score > best_frac + 1e-12) {
          best_prio = prio;
          best_frac = score;
          branch_var = j;
          branch_val = v;
        }
      }
      if (branch_var < 0) {
        // integral: round the integer coordinates clean and keep as incumbent
        std::vector<double> x = lp.x;
        for (int j : int_vars) x[j] = std::round(x[j]);
        double obj = model.objective_value(x);
        if (!out.has_solution || obj < out.objective) {
          out.has_solution = true;
          out.objective = obj;
          out.values = std::move(x);
        }
        diving = false;
      } else {
        auto floor_child = std::make_shared<BoundChange>();
        floor_child->var = branch_var;
        floor_child->is_upper = true;
        floor_child->value = std::floor(branch_val);
        floor_child->parent = current.chain;
        auto ceil_child = std::make_shared<BoundChange>();
        ceil_child->var = branch_var;
        ceil_child->is_upper = false;
        ceil_child->value = std::ceil(branch_val);
        ceil_child->parent = current.chain;
        open.push(Node{ceil_child, lp.objective, seq++});
        current = Node{floor_child, lp.objective, seq++};
        // keep diving on the floor child
      }
    }

    double gb = global_bound(diving, current.bound);
    if (out.has_solution) {
      double scale = std::max(1.0, std::fabs(out.objective));
      if (out.objective - gb <= 1e-9 * scale) {
        out.status = SolveStatus::Optimal;
        out.bound = std::min(gb, out.objective);
        return out;
      }
      if (opts.gap_limit > 0.0 && (out.objective - gb) / scale <= opts.gap_limit) {
        out.status = SolveStatus::GapLimit;
        out.bound = gb;
        return out;
      }
    }
    if (out.nodes_explored >= opts.node_limit) {
      out.status = SolveStatus::GapLimit;
      out.bound = gb;
      return out;
    }
  }

  if (out.has_solution) {
    out.status = SolveStatus::Optimal;
    out.bound = out.objective;
  } else {
    out.status = SolveStatus::Infeasible;
  }
  return out;
}

}  // namespace snd::milp
