#include "snd/milp/simplex_internal.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "snd/core/errors.hpp"
#include "snd/milp/model.hpp"

namespace snd::milp {

int MilpModel::add_var(std::string vname, double lower, double upper, double objective, VarKind kind) {
  Variable v;
  v.name = std::move(vname);
  v.lower = lower;
  v.upper = upper;
  v.objective = objective;
  v.kind = kind;
  vars.push_back(std::move(v));
  return static_cast<int>(vars.size()) - 1;
}

int MilpModel::add_row(std::string rname, std::vector<RowEntry> terms, RowSense sense, double rhs) {
  Constraint c;
  c.name = std::move(rname);
  c.terms = std::move(terms);
  c.sense = sense;
  c.rhs = rhs;
  rows.push_back(std::move(c));
  return static_cast<int>(rows.size()) - 1;
}

void MilpModel::validate() const {
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const auto& v = vars[j];
    if (!std::isfinite(v.lower))
      throw ValidationError("variable " + v.name + " needs a finite lower bound");
    if (std::isnan(v.upper) || (!std::isfinite(v.upper) && v.upper < 0))
      throw ValidationError("variable " + v.name + " has a bad upper bound");
    if (v.upper < v.lower)
      throw ValidationError("variable " + v.name + " has upper < lower");
    if (!std::isfinite(v.objective))
      throw ValidationError("variable " + v.name + " has a non-finite objective");
    if (v.kind == VarKind::Binary && (v.lower < 0.0 || (std::isfinite(v.upper) && v.upper > 1.0)))
      throw ValidationError("binary variable " + v.name + " has bounds outside [0,1]");
  }
  for (const auto& r : rows) {
    if (!std::isfinite(r.rhs)) throw ValidationError("row " + r.name + " has a non-finite rhs");
    for (const auto& e : r.terms) {
      if (e.var < 0 || e.var >= static_cast<int>(vars.size()))
        throw ValidationError("row " + r.name + " references a variable out of range");
      if (!std::isfinite(e.coef))
        throw ValidationError("row " + r.name + " has a non-finite coefficient");
    }
  }
}

double MilpModel::objective_value(const std::vector<double>& x) const {
  double s = 0.0;
  for (std::size_t j = 0; j < vars.size(); ++j) s += vars[j].objective * x[j];
  return s;
}

double MilpModel::max_violation(const std::vector<double>& x, bool check_integrality) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    worst = std::max(worst, vars[j].lower - x[j]);
    if (std::isfinite(vars[j].upper)) worst = std::max(worst, x[j] - vars[j].upper);
    if (check_integrality && vars[j].kind != VarKind::Continuous)
      worst = std::max(worst, std::fabs(x[j] - std::round(x[j])));
  }
  for (const auto& r : rows) {
    double a = 0.0;
    for (const auto& e : r.terms) a += e.coef * x[e.var];
    if (r.sense != RowSense::GE) worst = std::max(worst, a - r.rhs);
    if (r.sense != RowSense::LE) worst = std::max(worst, r.rhs - a);
  }
  return worst;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::GapLimit: return "gap_limit";
  }
  return "unknown";
}

double MilpSolution::gap() const {
  if (!has_solution) return kInf;
  return (objective - bound) / std::max(1.0, std::fabs(objective));
}

namespace detail {

StandardForm standardize(const MilpModel& model) {
  model.validate();
  StandardForm sf;
  sf.n = static_cast<int>(model.vars.size());
  // Empty rows carry no variables; check them once and drop them.
  std::vector<int> keep;
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    const auto& r = model.rows[i];
    bool empty = true;
    for (const auto& e : r.terms)
      if (e.coef != 0.0) empty = false;
    if (!empty) {
      keep.push_back(static_cast<int>(i));
      continue;
    }
    bool ok = (r.sense == RowSense::LE && r.rhs >= -1e-9) ||
              (r.sense == RowSense::GE && r.rhs <= 1e-9) ||
              (r.sense == RowSense::EQ && std::fabs(r.rhs) <= 1e-9);
    if (!ok) sf.trivially_infeasible = true;
  }
  sf.m = static_cast<int>(keep.size());
  sf.b.resize(sf.m);
  sf.slack_lower.resize(sf.m);
  sf.slack_upper.resize(sf.m);
  std::vector<std::vector<std::pair<int, double>>> cols(sf.n);
  for (int i = 0; i < sf.m; ++i) {
    const auto& r = model.rows[keep[i]];
    sf.b[i] = r.rhs;
    switch (r.sense) {
      case RowSense::LE: sf.slack_lower[i] = 0.0; sf.slack_upper[i] = kInf; break;
      case RowSense::EQ: sf.slack_lower[i] = 0.0; sf.slack_upper[i] = 0.0; break;
      case RowSense::GE: sf.slack_lower[i] = -kInf; sf.slack_upper[i] = 0.0; break;
    }
    for (const auto& e : r.terms)
      if (e.coef != 0.0) cols[e.var].emplace_back(i, e.coef);
  }
  sf.col_start.assign(sf.n + 1, 0);
  for (int j = 0; j < sf.n; ++j) {
    auto& c = cols[j];
    std::sort(c.begin(), c.end());
    // merge duplicate row entries
    std::vector<std::pair<int, double>> merged;
    for (const auto& e : c) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(e);
    }
    sf.col_start[j + 1] = sf.col_start[j] + static_cast<int>(merged.size());
    for (const auto& e : merged) {
      sf.col_row.push_back(e.first);
      sf.col_val.push_back(e.second);
    }
  }
  sf.obj.resize(sf.n);
  for (int j = 0; j < sf.n; ++j) sf.obj[j] = model.vars[j].objective;
  return sf;
}

namespace {

constexpr int kRefactorEvery = 50;   // eta vectors between basis refreshes
constexpr int kBlandAfter = 40;      // consecutive degenerate pivots before Bland's rule
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kDegenStep = 1e-11;

struct Eta {
  int row = -1;
  double diag = 1.0;
  std::vector<std::pair<int, double>> off;  // (row, w_i) excluding the pivot row
};

enum class Where : unsigned char { Basic, Lower, Upper };

// One bounded-simplex run over structurals + slacks + phase-1 artificials.
// Column indices: [0,n) structural, [n,n+m) slack, [n+m,n+2m) artificial.
class Simplex {
 public:
  Simplex(const StandardForm& sf, const std::vector<double>& lower,
          const std::vector<double>& upper, const SolveOptions& opts)
      : sf_(sf), opts_(opts), n_(sf.n), m_(sf.m) {
    ncols_ = n_ + 2 * m_;
    lb_.assign(ncols_, 0.0);
    ub_.assign(ncols_, 0.0);
    for (int j = 0; j < n_; ++j) {
      lb_[j] = lower[j];
      ub_[j] = upper[j];
    }
    for (int i = 0; i < m_; ++i) {
      lb_[n_ + i] = sf.slack_lower[i];
      ub_[n_ + i] = sf.slack_upper[i];
      lb_[n_ + m_ + i] = 0.0;
      ub_[n_ + m_ + i] = 0.0;  // opened to [0,inf) only while phase 1 needs them
    }
    art_sign_.assign(m_, 1.0);
    where_.assign(ncols_, Where::Lower);
    xn_.assign(ncols_, 0.0);
    basis_.resize(m_);
    basic_val_.assign(m_, 0.0);
    pos_in_basis_.assign(ncols_, -1);
  }

  LpResult run() {
    LpResult res;
    if (!init_start_point()) {
      res.status = SolveStatus::Infeasible;  // a structural has lower > upper
      res.iterations = iters_;
      return res;
    }
    if (need_phase1_) {
      phase1_ = true;
      loop();
      double infeas = phase1_objective();
      if (infeas > opts_.feas_tol * std::max(1.0, bscale_)) {
        res.status = SolveStatus::Infeasible;
        res.iterations = iters_;
        return res;
      }
      seal_artificials();
      phase1_ = false;
    }
    unbounded_ = false;
    loop();
    res.iterations = iters_;
    if (unbounded_) {
      res.status = SolveStatus::Unbounded;
      return res;
    }
    res.status = SolveStatus::Optimal;
    res.x.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j) res.x[j] = value_of(j);
    res.objective = 0.0;
    for (int j = 0; j < n_; ++j) res.objective += sf_.obj[j] * res.x[j];
    return res;
  }

 private:
  const StandardForm& sf_;
  const SolveOptions& opts_;
  int n_, m_, ncols_;
  std::vector<double> lb_, ub_;
  std::vector<double> art_sign_;
  std::vector<Where> where_;
  std::vector<double> xn_;  // values of nonbasic columns
  std::vector<int> basis_;
  std::vector<double> basic_val_;
  std::vector<int> pos_in_basis_;
  bool need_phase1_ = false;
  bool phase1_ = false;
  bool unbounded_ = false;
  long iters_ = 0;
  int degen_streak_ = 0;
  double bscale_ = 1.0;

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
  std::vector<Eta> etas_;

  double cost_of(int j) const {
    if (phase1_) return j >= n_ + m_ ? 1.0 : 0.0;
    return j < n_ ? sf_.obj[j] : 0.0;
  }

  double value_of(int j) const {
    int p = pos_in_basis_[j];
    return p >= 0 ? basic_val_[p] : xn_[j];
  }

  void column_of(int j, std::vector<std::pair<int, double>>& out) const {
    out.clear();
    if (j < n_) {
      for (int k = sf_.col_start[j]; k < sf_.col_start[j + 1]; ++k)
        out.emplace_back(sf_.col_row[k], sf_.col_val[k]);
    } else if (j < n_ + m_) {
      out.emplace_back(j - n_, 1.0);
    } else {
      out.emplace_back(j - n_ - m_, art_sign_[j - n_ - m_]);
    }
  }

  bool init_start_point() {
    for (int j = 0; j < n_; ++j) {
      if (lb_[j] > ub_[j] + 1e-12) return false;
      where_[j] = Where::Lower;
      xn_[j] = lb_[j];
    }
    for (double v : sf_.b) bscale_ = std::max(bscale_, std::fabs(v));
    // Residuals with every structural at its lower bound decide which rows
    // need a phase-1 artificial.
    std::vector<double> r = sf_.b;
    for (int j = 0; j < n_; ++j) {
      if (xn_[j] == 0.0) continue;
      for (int k = sf_.col_start[j]; k < sf_.col_start[j + 1]; ++k)
        r[sf_.col_row[k]] -= sf_.col_val[k] * xn_[j];
    }
    for (int i = 0; i < m_; ++i) {
      int slack = n_ + i, art = n_ + m_ + i;
      if (r[i] >= lb_[slack] - 1e-12 && r[i] <= ub_[slack] + 1e-12) {
        set_basic(slack, i, r[i]);
        where_[art] = Where::Lower;
        xn_[art] = 0.0;
      } else {
        need_phase1_ = true;
        where_[slack] = std::isfinite(lb_[slack]) && r[i] < lb_[slack] ? Where::Lower : Where::Upper;
        xn_[slack] = where_[slack] == Where::Lower ? lb_[slack] : ub_[slack];
        double resid = r[i] - xn_[slack];
        art_sign_[i] = resid >= 0 ? 1.0 : -1.0;
        ub_[art] = kInf;
        set_basic(art, i, std::fabs(resid));
      }
    }
    refactorize();
    return true;
  }

  void set_basic(int j, int row, double val) {
    basis_[row] = j;
    basic_val_[row] = val;
    pos_in_basis_[j] = row;
  }

  void refactorize() {
    etas_.clear();
    std::vector<Eigen::Triplet<double>> trips;
    std::vector<std::pair<int, double>> col;
    for (int i = 0; i < m_; ++i) {
      column_of(basis_[i], col);
      for (const auto& e : col) trips.emplace_back(e.first, i, e.second);
    }
    Eigen::SparseMatrix<double> B(m_, m_);
    B.setFromTriplets(trips.begin(), trips.end());
    lu_.compute(B);
    if (lu_.info() != Eigen::Success)
      throw SolverError("basis factorization failed (singular basis)");
    recompute_basics();
  }

  void recompute_basics() {
    Eigen::VectorXd rhs(m_);
    for (int i = 0; i < m_; ++i) rhs[i] = sf_.b[i];
    std::vector<std::pair<int, double>> col;
    for (int j = 0; j < ncols_; ++j) {
      if (pos_in_basis_[j] >= 0 || xn_[j] == 0.0) continue;
      column_of(j, col);
      for (const auto& e : col) rhs[e.first] -= e.second * xn_[j];
    }
    Eigen::VectorXd xb = lu_.solve(rhs);
    for (int i = 0; i < m_; ++i) basic_val_[i] = xb[i];
  }

  void ftran(Eigen::VectorXd& v) {
    v = lu_.solve(v);
    for (const auto& e : etas_) {
      double zr = v[e.row] / e.diag;
      if (zr != 0.0)
        for (const auto& [i, w] : e.off) v[i] -= w * zr;
      v[e.row] = zr;
    }
  }

  void btran(Eigen::VectorXd& v) {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double s = v[it->row];
      for (const auto& [i, w] : it->off) s -= w * v[i];
      v[it->row] = s / it->diag;
    }
    v = lu_.transpose().solve(v);
  }

  double phase1_objective() const {
    double s = 0.0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= n_ + m_) s += basic_val_[i];
    return s;
  }

  // Closes phase-1 artificials: bounds back to [0,0] and basic ones pivoted
  // out where the tableau row allows it (a redundant row keeps its artificial
  // basic at zero, harmlessly fixed).
  void seal_artificials() {
    for (int i = 0; i < m_; ++i) ub_[n_ + m_ + i] = 0.0;
    for (int a = n_ + m_; a < ncols_; ++a) {
      int r = pos_in_basis_[a];
      if (r < 0) continue;
      Eigen::VectorXd e = Eigen::VectorXd::Zero(m_);
      e[r] = 1.0;
      btran(e);
      int enter = -1;
      std::vector<std::pair<int, double>> col;
      for (int j = 0; j < n_ + m_ && enter < 0; ++j) {
        if (pos_in_basis_[j] >= 0) continue;
        if (lb_[j] == ub_[j]) continue;
        column_of(j, col);
        double alpha = 0.0;
        for (const auto& [i, v] : col) alpha += v * e[i];
        if (std::fabs(alpha) > 1e-7) enter = j;
      }
      if (enter < 0) continue;  // redundant row
      Eigen::VectorXd w = Eigen::VectorXd::Zero(m_);
      column_of(enter, col);
      for (const auto& [i, v] : col) w[i] = v;
      ftran(w);
      pivot(enter, r, w, value_of(enter));
      if (static_cast<int>(etas_.size()) >= kRefactorEvery) refactorize();
    }
  }

  void pivot(int enter, int leave_row, const Eigen::VectorXd& w, double enter_val) {
    Eta eta;
    eta.row = leave_row;
    eta.diag = w[leave_row];
    for (int i = 0; i < m_; ++i)
      if (i != leave_row && std::fabs(w[i]) > 1e-13) eta.off.emplace_back(i, w[i]);
    etas_.push_back(std::move(eta));
    int leaving = basis_[leave_row];
    pos_in_basis_[leaving] = -1;
    set_basic(enter, leave_row, enter_val);
  }

  void loop() {
    std::vector<std::pair<int, double>> col;
    while (true) {
      if (++iters_ > opts_.lp_iteration_limit) {
        std::ostringstream os;
        os << "simplex stalled: " << iters_ << " iterations, phase " << (phase1_ ? 1 : 2)
           << ", " << m_ << " rows, " << n_ << " columns";
        throw SolverError(os.str());
      }
      // BTRAN the basic costs, then price every nonbasic column.
      Eigen::VectorXd pi = Eigen::VectorXd::Zero(m_);
      bool any_cost = false;
      for (int i = 0; i < m_; ++i) {
        pi[i] = cost_of(basis_[i]);
        any_cost = any_cost || pi[i] != 0.0;
      }
      if (any_cost) btran(pi);
      bool bland = degen_streak_ >= kBlandAfter;
      int enter = -1;
      double best_score = 0.0;
      int enter_dir = 0;
      for (int j = 0; j < ncols_; ++j) {
        if (pos_in_basis_[j] >= 0 || lb_[j] == ub_[j]) continue;
        if (phase1_ == false && j >= n_ + m_) continue;
        double d = cost_of(j);
        if (any_cost) {
          column_of(j, col);
          for (const auto& [i, v] : col) d -= v * pi[i];
        }
        int dir = 0;
        if (where_[j] == Where::Lower && d < -kDualTol) dir = 1;
        if (where_[j] == Where::Upper && d > kDualTol) dir = -1;
        if (dir == 0) continue;
        if (bland) {
          enter = j;
          enter_dir = dir;
          break;
        }
        double score = std::fabs(d);
        if (score > best_score + 1e-12) {
          best_score = score;
          enter = j;
          enter_dir = dir;
        }
      }
      if (enter < 0) return;  // optimal for the current cost vector

      Eigen::VectorXd w = Eigen::VectorXd::Zero(m_);
      column_of(enter, col);
      for (const auto& [i, v] : col) w[i] = v;
      ftran(w);

      // Ratio test: basic variables block at their bounds; the entering
      // column can also flip to its opposite bound.
      double span = ub_[enter] - lb_[enter];
      double limit = std::isfinite(span) ? span : kInf;
      int block = -1;  // -1: bound flip
      double step = limit;
      for (int i = 0; i < m_; ++i) {
        double delta = -enter_dir * w[i];  // change of basic i per unit step
        if (delta > kPivotTol) {
          if (!std::isfinite(ub_[basis_[i]])) continue;
          double room = std::max((ub_[basis_[i]] - basic_val_[i]) / delta, 0.0);
          if (room < step - 1e-9 ||
              (room < step + 1e-9 && better_block(block, i, w, bland))) {
            step = std::min(step, room);
            block = i;
          }
        } else if (delta < -kPivotTol) {
          if (!std::isfinite(lb_[basis_[i]])) continue;
          double room = std::max((basic_val_[i] - lb_[basis_[i]]) / (-delta), 0.0);
          if (room < step - 1e-9 ||
              (room < step + 1e-9 && better_block(block, i, w, bland))) {
            step = std::min(step, room);
            block = i;
          }
        }
      }
      if (!std::isfinite(step)) {
        if (phase1_) throw SolverError("phase-1 objective unbounded (inconsistent state)");
        unbounded_ = true;
        return;
      }
      degen_streak_ = step < kDegenStep ? degen_streak_ + 1 : 0;

      double start = value_of(enter);
      for (int i = 0; i < m_; ++i) {
        double delta = -enter_dir * w[i];
        if (delta != 0.0) basic_val_[i] += delta * step;
      }
      if (block < 0) {
        // bound flip, basis unchanged
        where_[enter] = enter_dir > 0 ? Where::Upper : Where::Lower;
        xn_[enter] = where_[enter] == Where::Upper ? ub_[enter] : lb_[enter];
      } else {
        int leaving = basis_[block];
        double lv = basic_val_[block];
        pivot(enter, block, w, start + enter_dir * step);
        where_[leaving] = std::fabs(lv - lb_[leaving]) < std::fabs(lv - ub_[leaving])
                              ? Where::Lower
                              : Where::Upper;
        xn_[leaving] = where_[leaving] == Where::Lower ? lb_[leaving] : ub_[leaving];
        if (static_cast<int>(etas_.size()) >= kRefactorEvery) refactorize();
      }
    }
  }

  // Tie-break among equal ratios: largest pivot magnitude for stability, or
  // smallest basic index under Bland's rule.
  bool better_block(int cur, int cand, const Eigen::VectorXd& w, bool bland) const {
    if (cur < 0) return true;
    if (bland) return basis_[cand] < basis_[cur];
    double a = std::fabs(w[cand]), b = std::fabs(w[cur]);
    if (a > b + 1e-12) return true;
    if (b > a + 1e-12) return false;
    return cand < cur;
  }
};

}  // namespace

LpResult lp_solve_bounded(const StandardForm& sf, const std::vector<double>& lower,
                          const std::vector<double>& upper, const SolveOptions& opts) {
  if (sf.trivially_infeasible) return {};
  if (sf.m == 0) {
    // No rows: every column sits at whichever bound its cost prefers.
    LpResult r;
    r.x.resize(sf.n);
    for (int j = 0; j < sf.n; ++j) {
      if (lower[j] > upper[j] + 1e-9) return {};
      const double c = sf.obj[j];
      double at = c > 0.0 ? lower[j] : c < 0.0 ? upper[j] : 0.0;
      if (!std::isfinite(at)) {
        if (c != 0.0) {
          r.status = SolveStatus::Unbounded;
          return r;
        }
        at = 0.0;
      }
      if (c == 0.0) at = std::max(lower[j], std::min(at, upper[j]));
      r.x[j] = at;
      r.objective += c * at;
    }
    r.status = SolveStatus::Optimal;
    return r;
  }
  Simplex s(sf, lower, upper, opts);
  return s.run();
}

}  // namespace detail

MilpSolution solve_lp(const MilpModel& model, const SolveOptions& opts) {
  detail::StandardForm sf = detail::standardize(model);
  std::vector<double> lo(sf.n), hi(sf.n);
  for (int j = 0; j < sf.n; ++j) {
    lo[j] = model.vars[j].lower;
    hi[j] = model.vars[j].upper;
  }
  detail::LpResult r = detail::lp_solve_bounded(sf, lo, hi, opts);
  MilpSolution out;
  out.status = r.status;
  out.lp_iterations = r.iterations;
  if (r.status == SolveStatus::Optimal) {
    out.has_solution = true;
    out.objective = r.objective;
    out.bound = r.objective;
    out.values = std::move(r.x);
  }
  return out;
}

}  // namespace snd::milp
