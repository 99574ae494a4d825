#ifndef SND_MILP_SIMPLEX_INTERNAL_HPP
#define SND_MILP_SIMPLEX_INTERNAL_HPP

// Shared between the LP core and branch and bound: the standardized column
// form of a model, built once and reused across node solves.

#include <vector>

#include "snd/milp/model.hpp"

namespace snd::milp::detail {

// min c'x  s.t.  Ax + s = b, with per-column bounds; slack bounds encode the
// row sense (LE: [0,inf), EQ: [0,0], GE: (-inf,0]).
struct StandardForm {
  int n = 0;  // structural columns
  int m = 0;  // rows
  bool trivially_infeasible = false;  // an empty row with unsatisfiable rhs
  std::vector<int> col_start;  // CSC over structural columns, size n+1
  std::vector<int> col_row;
  std::vector<double> col_val;
  std::vector<double> b;
  std::vector<double> obj;         // structural costs
  std::vector<double> slack_lower; // per row
  std::vector<double> slack_upper;
};

StandardForm standardize(const MilpModel& model);

struct LpResult {
  SolveStatus status = SolveStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;  // structural values
  long iterations = 0;
};

// Bounded-variable revised primal simplex over a prepared StandardForm with
// per-call structural bounds (branch and bound tightens these per node).
LpResult lp_solve_bounded(const StandardForm& sf, const std::vector<double>& lower,
                          const std::vector<double>& upper, const SolveOptions& opts);

}  // namespace snd::milp::detail

#endif
