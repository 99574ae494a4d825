#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_simplex.hpp"
#include "random_models.hpp"
#include "snd/core/errors.hpp"
#include "snd/milp/model.hpp"
#include "snd/milp/mps.hpp"

using namespace snd;
using milp::MilpModel;
using milp::RowSense;
using milp::SolveStatus;
using milp::VarKind;

namespace {

// (value, weight) knapsack, capacity 6: picking both weight-3 items beats the
// single weight-4 item, best value 10.
MilpModel knapsack_model() {
  MilpModel m;
  m.add_var("x1", 0, 1, -6, VarKind::Binary);
  m.add_var("x2", 0, 1, -5, VarKind::Binary);
  m.add_var("x3", 0, 1, -5, VarKind::Binary);
  m.add_row("cap", {{0, 4}, {1, 3}, {2, 3}}, RowSense::LE, 6);
  return m;
}

// Single fixed-charge edge vs outsourcing: demand 5, capacity 10, design 10,
// flow 1/unit, outsourcing 5/unit. Building wins at 10 + 5 = 15.
MilpModel fixed_charge_model() {
  MilpModel m;
  int z = m.add_var("z", 0, 1, 10, VarKind::Binary);
  int x = m.add_var("x", 0, milp::kInf, 1, VarKind::Continuous);
  int w = m.add_var("w", 0, milp::kInf, 5, VarKind::Continuous);
  m.add_row("demand", {{x, 1}, {w, 1}}, RowSense::EQ, 5);
  m.add_row("cap", {{x, 1}, {z, -10}}, RowSense::LE, 0);
  return m;
}

using tests::random_lp;
using tests::random_milp;

}  // namespace

TEST_CASE("oracle reproduces hand-computed knapsack and fixed-charge values") {
  auto k = tests::oracle_solve_milp(knapsack_model());
  REQUIRE(k.status == tests::OracleStatus::Optimal);
  CHECK(k.objective == doctest::Approx(-10.0).epsilon(1e-9));

  // enumeration needs finite continuous bounds; cap flows at the demand
  MilpModel fm = fixed_charge_model();
  fm.vars[1].upper = 5;
  fm.vars[2].upper = 5;
  auto f = tests::oracle_solve_milp(fm);
  REQUIRE(f.status == tests::OracleStatus::Optimal);
  CHECK(f.objective == doctest::Approx(15.0).epsilon(1e-9));
}

TEST_CASE("engine matches hand-computed values") {
  auto k = milp::solve_milp(knapsack_model());
  REQUIRE(k.status == SolveStatus::Optimal);
  CHECK(k.objective == doctest::Approx(-10.0).epsilon(1e-9));
  CHECK(k.bound == doctest::Approx(k.objective).epsilon(1e-9));

  auto f = milp::solve_milp(fixed_charge_model());
  REQUIRE(f.status == SolveStatus::Optimal);
  CHECK(f.objective == doctest::Approx(15.0).epsilon(1e-9));
}

TEST_CASE("solve_lp agrees with the naive tableau oracle on random LPs") {
  std::mt19937_64 rng(20240901);
  int optimal_seen = 0, infeasible_seen = 0;
  for (int it = 0; it < 100; ++it) {
    MilpModel m = random_lp(rng);
    auto oracle = tests::oracle_solve_lp(m);
    auto got = milp::solve_lp(m);
    if (oracle.status == tests::OracleStatus::Optimal) {
      ++optimal_seen;
      REQUIRE(got.status == SolveStatus::Optimal);
      double scale = std::max(1.0, std::fabs(oracle.objective));
      CHECK(std::fabs(got.objective - oracle.objective) <= 1e-6 * scale);
      CHECK(m.max_violation(got.values, false) <= 1e-6);
    } else if (oracle.status == tests::OracleStatus::Infeasible) {
      ++infeasible_seen;
      REQUIRE(got.status == SolveStatus::Infeasible);
    }
  }
  CHECK(optimal_seen >= 30);
  CHECK(infeasible_seen >= 5);
}

TEST_CASE("solve_milp agrees with exhaustive enumeration on random MILPs") {
  std::mt19937_64 rng(77001);
  int optimal_seen = 0;
  for (int it = 0; it < 100; ++it) {
    MilpModel m = random_milp(rng, it % 4 == 0);
    auto oracle = tests::oracle_solve_milp(m);
    auto got = milp::solve_milp(m);
    if (oracle.status == tests::OracleStatus::Optimal) {
      ++optimal_seen;
      REQUIRE(got.status == SolveStatus::Optimal);
      double scale = std::max(1.0, std::fabs(oracle.objective));
      CHECK(std::fabs(got.objective - oracle.objective) <= 1e-6 * scale);
      CHECK(m.max_violation(got.values, true) <= 1e-6);
    } else {
      REQUIRE(got.status == SolveStatus::Infeasible);
    }
  }
  CHECK(optimal_seen >= 30);
}

TEST_CASE("LP-integral model stops at the root node") {
  // balanced transportation problem; its LP relaxation is integral
  MilpModel m;
  int x00 = m.add_var("x00", 0, milp::kInf, 4, VarKind::Integer);
  int x01 = m.add_var("x01", 0, milp::kInf, 6, VarKind::Integer);
  int x10 = m.add_var("x10", 0, milp::kInf, 3, VarKind::Integer);
  int x11 = m.add_var("x11", 0, milp::kInf, 2, VarKind::Integer);
  m.add_row("s0", {{x00, 1}, {x01, 1}}, RowSense::EQ, 7);
  m.add_row("s1", {{x10, 1}, {x11, 1}}, RowSense::EQ, 5);
  m.add_row("d0", {{x00, 1}, {x10, 1}}, RowSense::EQ, 6);
  m.add_row("d1", {{x01, 1}, {x11, 1}}, RowSense::EQ, 6);
  auto got = milp::solve_milp(m);
  REQUIRE(got.status == SolveStatus::Optimal);
  CHECK(got.nodes_explored == 1);
  auto oracle_obj = tests::oracle_solve_lp([&] {
    MilpModel c = m;
    for (auto& v : c.vars) v.upper = 12;
    return c;
  }());
  CHECK(got.objective == doctest::Approx(oracle_obj.objective).epsilon(1e-9));
}

TEST_CASE("unbounded and infeasible statuses") {
  MilpModel unb;
  unb.add_var("x", 0, milp::kInf, -1);
  unb.add_row("r", {{0, -1}}, RowSense::LE, 5);
  CHECK(milp::solve_lp(unb).status == SolveStatus::Unbounded);
  CHECK(milp::solve_milp(unb).status == SolveStatus::Unbounded);

  MilpModel inf;
  inf.add_var("x", 0, 1, 1);
  inf.add_var("y", 0, 1, 1);
  inf.add_row("r", {{0, 1}, {1, 1}}, RowSense::GE, 5);
  CHECK(milp::solve_lp(inf).status == SolveStatus::Infeasible);
  CHECK(milp::solve_milp(inf).status == SolveStatus::Infeasible);

  MilpModel empty;
  empty.add_var("x", 0, 1, 1);
  empty.add_row("bad", {}, RowSense::EQ, 3);
  CHECK(milp::solve_lp(empty).status == SolveStatus::Infeasible);
}

TEST_CASE("models without rows solve at their bounds") {
  MilpModel m;
  m.add_var("a", 2, 9, 3);                 // wants its lower bound
  m.add_var("b", -4, 6, -2);               // wants its upper bound
  m.add_var("c", 1, 5, 0);                 // indifferent, any feasible point
  auto lp = milp::solve_lp(m);
  REQUIRE(lp.status == SolveStatus::Optimal);
  CHECK(lp.objective == doctest::Approx(2 * 3 + 6 * -2).epsilon(1e-12));
  CHECK(lp.values[0] == 2);
  CHECK(lp.values[1] == 6);
  CHECK(lp.values[2] >= 1);
  CHECK(lp.values[2] <= 5);

  auto mip = milp::solve_milp([] {
    MilpModel i;
    i.add_var("a", 0, 7, -1, VarKind::Integer);
    return i;
  }());
  REQUIRE(mip.status == SolveStatus::Optimal);
  CHECK(mip.objective == doctest::Approx(-7).epsilon(1e-12));

  MilpModel unb;
  unb.add_var("x", 0, milp::kInf, -1);
  CHECK(milp::solve_lp(unb).status == SolveStatus::Unbounded);
}

TEST_CASE("node limit reports gap_limit with the incumbent and a valid bound") {
  std::mt19937_64 rng(5150);
  MilpModel m = random_milp(rng, false);
  auto exact = milp::solve_milp(m);
  if (exact.status != SolveStatus::Optimal) return;
  milp::SolveOptions opts;
  opts.node_limit = 1;
  opts.warm_start = nullptr;
  auto limited = milp::solve_milp(m, opts);
  if (limited.status == SolveStatus::Optimal) {
    CHECK(limited.objective == doctest::Approx(exact.objective).epsilon(1e-9));
  } else {
    REQUIRE(limited.status == SolveStatus::GapLimit);
    CHECK(limited.bound <= exact.objective + 1e-9);
  }
}

TEST_CASE("warm start is validated and kept as incumbent") {
  MilpModel m = knapsack_model();
  std::vector<double> start{0, 1, 1};
  milp::SolveOptions opts;
  opts.warm_start = &start;
  auto got = milp::solve_milp(m, opts);
  REQUIRE(got.status == SolveStatus::Optimal);
  CHECK(got.objective == doctest::Approx(-10.0).epsilon(1e-9));

  // an infeasible warm start must be ignored, not believed
  std::vector<double> bad{1, 1, 1};
  opts.warm_start = &bad;
  got = milp::solve_milp(m, opts);
  REQUIRE(got.status == SolveStatus::Optimal);
  CHECK(got.objective == doctest::Approx(-10.0).epsilon(1e-9));
}

TEST_CASE("deterministic resolves") {
  std::mt19937_64 rng(909);
  for (int it = 0; it < 5; ++it) {
    MilpModel m = random_milp(rng, false);
    auto a = milp::solve_milp(m);
    auto b = milp::solve_milp(m);
    CHECK(a.status == b.status);
    CHECK(a.nodes_explored == b.nodes_explored);
    if (a.status == SolveStatus::Optimal) {
      CHECK(a.objective == b.objective);
      CHECK(a.values == b.values);
    }
  }
}

TEST_CASE("iteration cap raises a solver error with diagnostics") {
  std::mt19937_64 rng(31337);
  MilpModel m = random_lp(rng);
  milp::SolveOptions opts;
  opts.lp_iteration_limit = 1;
  CHECK_THROWS_AS(milp::solve_lp(m, opts), SolverError);
}

TEST_CASE("MPS dump is deterministic and carries integer markers") {
  MilpModel m = knapsack_model();
  std::string a = milp::to_mps(m);
  std::string b = milp::to_mps(m);
  CHECK(a == b);
  CHECK(a.find("'INTORG'") != std::string::npos);
  CHECK(a.find("ENDATA") != std::string::npos);
  CHECK(a.find("x1") != std::string::npos);
  // full-precision numbers survive
  MilpModel p;
  p.add_var("c", 0, 1, 0.1 + 0.2);
  CHECK(milp::to_mps(p).find("0.30000000000000004") != std::string::npos);
}
