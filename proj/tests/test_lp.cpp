#include <doctest.h>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "eqsched/lp.hpp"

using namespace eqsched;

namespace {

using Problem = LpProblem<Rational>;
using Rel = LpRelation;

Rational R(long long a, long long b = 1) { return Rational(a, b); }

void row(Problem& prob, Eigen::Index k, std::vector<Rational> coeffs, Rel rel, Rational rhs) {
  for (std::size_t v = 0; v < coeffs.size(); ++v) prob.coeffs(k, static_cast<Eigen::Index>(v)) = coeffs[v];
  prob.relations[k] = rel;
  prob.rhs(k) = rhs;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("single lower bound") {
  Problem prob(1, 1);
  prob.objective << 1;
  row(prob, 0, {R(1)}, Rel::greater_equal, R(3));
  const auto sol = solve_lp(prob);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.values(0) == 3);
  CHECK(sol.objective_value == 3);
  CHECK(satisfies(prob, sol.values));
}

TEST_CASE("unbounded") {
  Problem prob(1, 1);
  prob.objective << -1;
  row(prob, 0, {R(1)}, Rel::greater_equal, R(0));
  CHECK(solve_lp(prob).status == LpStatus::unbounded);
  Problem no_rows(1, 0);
  no_rows.objective << -1;
  CHECK(solve_lp(no_rows).status == LpStatus::unbounded);
}

TEST_CASE("infeasible") {
  Problem prob(1, 1);
  prob.objective << 1;
  row(prob, 0, {R(1)}, Rel::less_equal, R(-1));
  CHECK(solve_lp(prob).status == LpStatus::infeasible);

  Problem free_var(2, 3);
  free_var.free = {true, true};
  free_var.objective << 1, 1;
  row(free_var, 0, {R(1), R(1)}, Rel::greater_equal, R(2));
  row(free_var, 1, {R(1), R(0)}, Rel::less_equal, R(-1));
  row(free_var, 2, {R(1), R(0)}, Rel::greater_equal, R(0));
  CHECK(solve_lp(free_var).status == LpStatus::infeasible);
}

TEST_CASE("equality with a bound") {
  Problem prob(2, 2);
  prob.objective << 2, 1;
  row(prob, 0, {R(1), R(1)}, Rel::equal, R(4));
  row(prob, 1, {R(1), R(0)}, Rel::greater_equal, R(1));
  const auto sol = solve_lp(prob);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.values(0) == 1);
  CHECK(sol.values(1) == 3);
  CHECK(sol.objective_value == 5);
}

TEST_CASE("free variables go negative") {
  Problem prob(1, 1);
  prob.free = {true};
  prob.objective << 1;
  row(prob, 0, {R(1)}, Rel::greater_equal, R(-5, 2));
  const auto sol = solve_lp(prob);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.values(0) == R(-5, 2));
}

TEST_CASE("redundant equalities") {
  Problem prob(2, 2);
  prob.objective << 1, 0;
  row(prob, 0, {R(1), R(1)}, Rel::equal, R(2));
  row(prob, 1, {R(2), R(2)}, Rel::equal, R(4));
  const auto sol = solve_lp(prob);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective_value == 0);
  CHECK(sol.values(1) == 2);
}

TEST_CASE("degenerate problem that cycles without an anti-cycling rule") {
  Problem prob(4, 3);
  prob.objective << R(-3, 4), R(20), R(-1, 2), R(6);
  row(prob, 0, {R(1, 4), R(-8), R(-1), R(9)}, Rel::less_equal, R(0));
  row(prob, 1, {R(1, 2), R(-12), R(-1, 2), R(3)}, Rel::less_equal, R(0));
  row(prob, 2, {R(0), R(0), R(1), R(0)}, Rel::less_equal, R(1));
  const auto sol = solve_lp(prob);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective_value == R(-5, 4));
  CHECK(satisfies(prob, sol.values));
}

TEST_CASE("random covering problems: exact feasibility, weak duality, determinism") {
  boost::random::mt19937_64 rng(99);
  boost::random::uniform_int_distribution<int> coef(0, 4);
  boost::random::uniform_int_distribution<int> point(0, 30);
  for (int trial = 0; trial < 60; ++trial) {
    const int vars = 3, rows = 3;
    Problem prob(vars, rows);
    for (int v = 0; v < vars; ++v) prob.objective(v) = Rational(coef(rng) + 1);
    for (int k = 0; k < rows; ++k) {
      prob.relations[k] = Rel::greater_equal;
      prob.rhs(k) = Rational(coef(rng) * 3);
      for (int v = 0; v < vars; ++v) prob.coeffs(k, v) = Rational(coef(rng) + (v == k ? 1 : 0));
    }
    const auto sol = solve_lp(prob);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(satisfies(prob, sol.values));
    CHECK(sol.objective_value == prob.objective.dot(sol.values));

    const auto again = solve_lp(prob);
    CHECK(again.values == sol.values);
    CHECK(again.pivots == sol.pivots);

    int feasible = 0;
    for (int sample = 0; sample < 300; ++sample) {
      VectorX<Rational> x(vars);
      for (int v = 0; v < vars; ++v) x(v) = Rational(point(rng), 2);
      if (!satisfies(prob, x)) continue;
      ++feasible;
      CHECK(prob.objective.dot(x) >= sol.objective_value);
    }
    CHECK(feasible > 0);

    LpProblem<double> approx(vars, rows);
    approx.coeffs = prob.coeffs.unaryExpr([](const Rational& r) { return r.convert_to<double>(); });
    approx.relations = prob.relations;
    approx.rhs = prob.rhs.unaryExpr([](const Rational& r) { return r.convert_to<double>(); });
    approx.objective = prob.objective.unaryExpr([](const Rational& r) { return r.convert_to<double>(); });
    const auto fsol = solve_lp(approx);
    REQUIRE(fsol.status == LpStatus::optimal);
    CHECK(fsol.objective_value == doctest::Approx(sol.objective_value.convert_to<double>()).epsilon(1e-9));
  }
}

TEST_CASE("status names") {
  CHECK(std::string(to_string(LpStatus::optimal)) == "optimal");
  CHECK(std::string(to_string(LpStatus::infeasible)) == "infeasible");
  CHECK(std::string(to_string(LpStatus::unbounded)) == "unbounded");
}

}  // TEST_SUITE
