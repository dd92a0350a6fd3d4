#include "eqsched/normal_lp.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "eqsched/structure.hpp"

namespace eqsched {

NormalSchedule extract(const LpSolution<Rational>& sol, const VarMap& vm, const Instance& inst) {
  if (sol.status != LpStatus::optimal) {
    throw SolverAnomaly(std::string("LP status is ") + to_string(sol.status) + ", expected optimal");
  }
  NormalSchedule ns(vm.n, vm.m);
  for (int j = 0; j < vm.n; ++j) {
    for (int q = 0; q < vm.m; ++q) {
      ns.start(j, q) = sol.values(vm.start(j, q));
      ns.end(j, q) = sol.values(vm.end(j, q));
    }
  }
  if (auto normal = is_normal(ns); !normal) throw SolverAnomaly("extracted schedule not normal: " + normal.witness);
  const VectorX<Rational> work = ns.work();
  for (int j = 0; j < vm.n; ++j) {
    if (work(j) != inst.p) throw SolverAnomaly("job " + std::to_string(j + 1) + " has wrong total work");
    if (ns.start(j, vm.m - 1) < inst.releases[j]) {
      throw SolverAnomaly("job " + std::to_string(j + 1) + " starts before its release");
    }
  }
  return ns;
}

IntervalSchedule to_interval_schedule(const NormalSchedule& ns) {
  IntervalSchedule out(static_cast<int>(ns.jobs()), static_cast<int>(ns.machines()));
  for (int j = 0; j < ns.jobs(); ++j) {
    // Machine m first: that is the order the job runs in.
    for (int q = static_cast<int>(ns.machines()) - 1; q >= 0; --q) {
      if (ns.start(j, q) < ns.end(j, q)) out.add(j, q, ns.start(j, q), ns.end(j, q));
    }
  }
  return out;
}

RationalVector true_completions(const NormalSchedule& ns) {
  RationalVector out(ns.jobs());
  for (Eigen::Index j = 0; j < ns.jobs(); ++j) {
    std::optional<Rational> c;
    for (Eigen::Index q = 0; q < ns.machines(); ++q) {
      if (ns.start(j, q) < ns.end(j, q) && (!c || ns.end(j, q) > *c)) c = ns.end(j, q);
    }
    if (!c) throw std::invalid_argument("job " + std::to_string(j + 1) + " has no nonempty interval");
    out[j] = *c;
  }
  return out;
}

SolveReport solve(const Instance& inst) {
  auto [prob, vm] = build_lp<Rational>(inst);
  const auto sol = solve_lp(prob);

  SolveReport report;
  report.lp = {prob.num_vars(), prob.num_rows(), sol.pivots};
  report.normal = extract(sol, vm, inst);
  report.objective = sol.objective_value;
  report.schedule = to_interval_schedule(report.normal);

  const RationalVector actual = true_completions(report.normal);
  report.completions.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) report.completions[inst.original_ids[j] - 1] = actual[j];

  report.validation = validate(report.schedule, inst);
  auto& checks = report.validation.checks;
  {
    Verdict v = is_normal(report.schedule, inst);
    checks.push_back({"normal", v.holds, v.witness});
  }
  {
    Verdict v = is_left_adjusted(report.schedule, inst);
    checks.push_back({"left-adjusted", v.holds, v.witness});
  }
  {
    ValidationReport::Check check{"tight", true, {}};
    for (int j = 0; j < inst.n && check.passed; ++j) {
      if (actual[j] != report.normal.end(j, 0)) {
        check.passed = false;
        check.witness = "job " + std::to_string(j + 1) + " completes at " + to_token(actual[j]) +
                        " but end(j,1) = " + to_token(report.normal.end(j, 0));
      }
    }
    const Rational sum = std::accumulate(actual.begin(), actual.end(), Rational(0));
    if (check.passed && sum != report.objective) {
      check.passed = false;
      check.witness = "sum of completions " + to_token(sum) + " != objective " + to_token(report.objective);
    }
    checks.push_back(std::move(check));
  }
  {
    ValidationReport::Check check{"preemption-bound", true, {}};
    const auto pre = preemption_counts(report.schedule);
    for (int j = 0; j < inst.n; ++j) {
      if (pre[j] > inst.m - 1) {
        check.passed = false;
        check.witness = "job " + std::to_string(j + 1) + " preempted " + std::to_string(pre[j]) + " times";
        break;
      }
    }
    checks.push_back(std::move(check));
  }
  return report;
}

double solve_objective_float(const Instance& inst) {
  auto [prob, vm] = build_lp<double>(inst);
  const auto sol = solve_lp(prob);
  if (sol.status != LpStatus::optimal) {
    throw SolverAnomaly(std::string("LP status is ") + to_string(sol.status) + ", expected optimal");
  }
  return sol.objective_value;
}

std::string report_text(const SolveReport& report, const Instance& inst) {
  std::ostringstream out;
  out << "objective " << to_token(report.objective) << '\n';
  out << "completions";
  for (const auto& c : report.completions) out << ' ' << to_token(c);
  out << '\n';
  out << "lp vars " << report.lp.vars << " constraints " << report.lp.constraints << " pivots "
      << report.lp.pivots << '\n';
  for (const auto& row : intervals(to_input_order(report.schedule, inst))) {
    out << "interval job " << row.job + 1 << " machine " << row.machine + 1 << " [" << to_token(row.start)
        << ", " << to_token(row.end) << ")\n";
  }
  for (const auto& check : report.validation.checks) {
    out << "check " << check.name << ' ' << (check.passed ? "pass" : "fail");
    if (!check.witness.empty()) out << " (" << check.witness << ')';
    out << '\n';
  }
  return out.str();
}

std::string report_json(const SolveReport& report, const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["objective"] = to_token(report.objective);
  doc["completions"] = nlohmann::ordered_json::array();
  for (const auto& c : report.completions) doc["completions"].push_back(to_token(c));
  doc["intervals"] = nlohmann::ordered_json::array();
  for (const auto& row : intervals(to_input_order(report.schedule, inst))) {
    doc["intervals"].push_back({{"job", row.job + 1},
                                {"machine", row.machine + 1},
                                {"start", to_token(row.start)},
                                {"end", to_token(row.end)}});
  }
  doc["lp_stats"] = {{"vars", report.lp.vars},
                     {"constraints", report.lp.constraints},
                     {"pivots", report.lp.pivots}};
  doc["validation"] = nlohmann::ordered_json::object();
  for (const auto& check : report.validation.checks) {
    doc["validation"][check.name] = check.passed ? "pass" : "fail";
  }
  return doc.dump(2) + "\n";
}

}  // namespace eqsched
