#ifndef SND_MILP_MODEL_HPP
#define SND_MILP_MODEL_HPP

#include <limits>
#include <string>
#include <vector>

namespace snd::milp {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { Continuous, Integer, Binary };
enum class RowSense { LE, EQ, GE };

struct Variable {
  std::string name;
  double lower = 0.0;   // must be finite
  double upper = kInf;  // finite or +inf
  double objective = 0.0;
  VarKind kind = VarKind::Continuous;
  // Branching prefers fractional variables of the highest priority class.
  int branch_priority = 0;
};

struct RowEntry {
  int var = -1;
  double coef = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<RowEntry> terms;
  RowSense sense = RowSense::LE;
  double rhs = 0.0;
};

// Minimization model. Rows reference variables by index.
struct MilpModel {
  std::string name = "model";
  std::vector<Variable> vars;
  std::vector<Constraint> rows;

  int add_var(std::string name, double lower, double upper, double objective,
              VarKind kind = VarKind::Continuous);
  int add_row(std::string name, std::vector<RowEntry> terms, RowSense sense, double rhs);

  void validate() const;  // finite lower bounds, binary in [0,1], indices in range
  double objective_value(const std::vector<double>& x) const;
  // max violation over rows, bounds and integrality (integrality only when
  // check_integrality is set); used to vet warm starts and final solutions.
  double max_violation(const std::vector<double>& x, bool check_integrality) const;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, GapLimit };

std::string to_string(SolveStatus s);

struct MilpSolution {
  SolveStatus status = SolveStatus::Infeasible;
  bool has_solution = false;       // a feasible point is available in `values`
  double objective = kInf;         // objective of `values` when has_solution
  double bound = -kInf;            // proven lower bound on the optimum
  std::vector<double> values;      // one entry per model variable
  long nodes_explored = 0;
  long lp_iterations = 0;

  // Relative optimality gap of the incumbent against the proven bound.
  double gap() const;
};

struct SolveOptions {
  double gap_limit = 0.0;  // stop when gap() <= gap_limit
  long node_limit = std::numeric_limits<long>::max();
  long lp_iteration_limit = 4000000;  // per LP solve; beyond this the solver throws
  double feas_tol = 1e-7;
  double int_tol = 1e-6;
  // Optional feasible point used as the initial incumbent (checked first).
  const std::vector<double>* warm_start = nullptr;
};

// Simplex over the continuous relaxation; integrality markers are ignored.
MilpSolution solve_lp(const MilpModel& model, const SolveOptions& opts = {});

// Branch and bound on top of solve_lp. Deterministic: best-bound node
// selection with depth-first plunging, most-fractional branching, floor
// child explored first.
MilpSolution solve_milp(const MilpModel& model, const SolveOptions& opts = {});

}  // namespace snd::milp

#endif
