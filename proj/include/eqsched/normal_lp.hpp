#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "eqsched/instance.hpp"
#include "eqsched/lp.hpp"
#include "eqsched/normal_schedule.hpp"
#include "eqsched/schedule.hpp"

namespace eqsched {

/// The solver or extraction produced something the LP's structure rules out
/// (infeasible, unbounded, or an invariant violated). Always a bug.
class SolverAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column layout of the normal-schedule LP: all starts, then all ends, each
/// in row-major (job, machine) order.
struct VarMap {
  int n = 0;
  int m = 0;

  Eigen::Index start(int job, int machine) const { return Eigen::Index(job) * m + machine; }
  Eigen::Index end(int job, int machine) const { return Eigen::Index(n) * m + start(job, machine); }
  Eigen::Index size() const { return 2 * Eigen::Index(n) * m; }
};

template <typename Scalar>
Scalar scalar_cast(const Rational& value) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return value;
  } else {
    return value.template convert_to<Scalar>();
  }
}

/// minimize sum_j end(j,1) subject to, in this row order:
///   start(j,m) >= r_j                       (n rows)
///   sum_q end(j,q) - start(j,q) = p         (n rows)
///   start(j,q) <= end(j,q)                  (n m rows)
///   end(j,q) <= start(j,q-1), q >= 2        (n (m-1) rows)
///   end(j,q) <= start(j+1,q), j < n         ((n-1) m rows)
/// All 2nm variables are nonnegative.
template <typename Scalar>
std::pair<LpProblem<Scalar>, VarMap> build_lp(const Instance& inst) {
  const int n = inst.n;
  const int m = inst.m;
  const VarMap vm{n, m};
  const Eigen::Index rows = 3 * Eigen::Index(n) * m + n - m;
  LpProblem<Scalar> prob(vm.size(), rows);

  Eigen::Index row = 0;
  for (int j = 0; j < n; ++j, ++row) {
    prob.coeffs(row, vm.start(j, m - 1)) = Scalar(-1);
    prob.rhs(row) = -scalar_cast<Scalar>(inst.releases[j]);
  }
  const Scalar p = scalar_cast<Scalar>(inst.p);
  for (int j = 0; j < n; ++j, ++row) {
    for (int q = 0; q < m; ++q) {
      prob.coeffs(row, vm.end(j, q)) = Scalar(1);
      prob.coeffs(row, vm.start(j, q)) = Scalar(-1);
    }
    prob.relations[row] = LpRelation::equal;
    prob.rhs(row) = p;
  }
  for (int j = 0; j < n; ++j) {
    for (int q = 0; q < m; ++q, ++row) {
      prob.coeffs(row, vm.start(j, q)) = Scalar(1);
      prob.coeffs(row, vm.end(j, q)) = Scalar(-1);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int q = 1; q < m; ++q, ++row) {
      prob.coeffs(row, vm.end(j, q)) = Scalar(1);
      prob.coeffs(row, vm.start(j, q - 1)) = Scalar(-1);
    }
  }
  for (int j = 0; j + 1 < n; ++j) {
    for (int q = 0; q < m; ++q, ++row) {
      prob.coeffs(row, vm.end(j, q)) = Scalar(1);
      prob.coeffs(row, vm.start(j + 1, q)) = Scalar(-1);
    }
  }
  for (int j = 0; j < n; ++j) prob.objective(vm.end(j, 0)) = Scalar(1);
  return {std::move(prob), vm};
}

/// Reads the start/end matrices out of an optimal solution and checks every
/// normal-schedule invariant exactly. Throws SolverAnomaly otherwise.
NormalSchedule extract(const LpSolution<Rational>& sol, const VarMap& vm, const Instance& inst);

/// Drops empty intervals; machine q of the matrix becomes piece machine q.
IntervalSchedule to_interval_schedule(const NormalSchedule& ns);

/// Per job, the latest end over nonempty intervals. Can be smaller than
/// end(j,1) when the machine-1 interval is empty.
RationalVector true_completions(const NormalSchedule& ns);

struct LpStats {
  Eigen::Index vars = 0;
  Eigen::Index constraints = 0;
  std::int64_t pivots = 0;
};

struct SolveReport {
  Rational objective;
  /// Indexed by input position.
  RationalVector completions;
  /// Indexed by sorted position, as the solver sees the jobs.
  NormalSchedule normal;
  IntervalSchedule schedule;
  LpStats lp;
  /// Feasibility checks plus normal, left-adjusted, tight (true completions
  /// equal end(j,1)) and preemption-bound.
  ValidationReport validation;
};

/// Builds, solves, extracts and validates. Throws SolverAnomaly on any status
/// other than optimal; failed checks are recorded in `validation` (they
/// would be an anomaly too, and callers decide how to surface them).
SolveReport solve(const Instance& inst);

/// Floating-point path for speed experiments; not used by the exact checks.
double solve_objective_float(const Instance& inst);

/// Human-readable report; jobs and machines are 1-based, jobs in input order.
std::string report_text(const SolveReport& report, const Instance& inst);
/// Stable key-value tree: objective, completions, intervals, lp_stats,
/// validation. Rationals are tokens (`a` or `a/b`).
std::string report_json(const SolveReport& report, const Instance& inst);

}  // namespace eqsched
