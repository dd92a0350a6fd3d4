// eqsched: generate, solve, validate and compare preemptive schedules of
// equal-length jobs with release times on identical machines.
//
// Exit codes: 0 success, 1 validation or comparison failure, 2 usage or input
// error, 3 internal anomaly.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqsched/compare.hpp"
#include "eqsched/gantt.hpp"
#include "eqsched/instance.hpp"
#include "eqsched/normal_lp.hpp"
#include "eqsched/oracle.hpp"
#include "eqsched/schedule.hpp"
#include "eqsched/structure.hpp"

namespace {

using namespace eqsched;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

// Input problems surface as this and map to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance_text(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Loads a schedule file and relabels it onto the instance's sorted order.
IntervalSchedule load_schedule(const std::string& path, const Instance& inst) {
  IntervalSchedule sched;
  try {
    sched = parse_schedule_text(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  if (sched.job_count() != inst.n || sched.machines != inst.m) {
    throw InputError(path + ": schedule is for n=" + std::to_string(sched.job_count()) +
                     " m=" + std::to_string(sched.machines) + ", instance has n=" + std::to_string(inst.n) +
                     " m=" + std::to_string(inst.m));
  }
  return from_input_order(sched, inst);
}

std::uint64_t transition_cap() {
  OracleOptions defaults;
  const char* env = std::getenv("EQSCHED_TRANSITION_CAP");
  if (!env || !*env) return defaults.transition_cap;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw InputError(std::string("EQSCHED_TRANSITION_CAP is not an unsigned integer: ") + env);
  }
}

struct GenArgs {
  GenParams params;
  std::string out = "-";
};

int cmd_gen(const GenArgs& args) {
  write_file(args.out, instance_text(generate_instance(args.params)));
  return kOk;
}

struct SolveArgs {
  std::string in;
  std::string out_schedule;
  std::string report = "text";
  bool floating = false;
};

int cmd_solve(const SolveArgs& args) {
  const Instance inst = load_instance(args.in);
  if (args.floating) {
    std::cout << "objective " << solve_objective_float(inst) << '\n';
    return kOk;
  }
  const SolveReport report = solve(inst);
  std::cout << (args.report == "structured" ? report_json(report, inst) : report_text(report, inst));
  if (!args.out_schedule.empty()) write_file(args.out_schedule, schedule_text(to_input_order(report.schedule, inst)));
  if (!report.validation.ok()) {
    std::cerr << "internal anomaly: LP schedule failed validation\n";
    return kInternal;
  }
  return kOk;
}

struct OracleArgs {
  std::string in;
  bool nonpreemptive = false;
  std::string report = "text";
};

int cmd_oracle(const OracleArgs& args) {
  const Instance inst = load_instance(args.in);
  if (!inst.all_integer()) throw InputError("oracle needs integer processing and release times");
  OracleOptions options;
  options.nonpreemptive = args.nonpreemptive;
  options.transition_cap = transition_cap();
  const OracleResult result = dp_optimum(inst, options);

  if (args.report == "structured") {
    nlohmann::ordered_json doc;
    doc["objective"] = std::to_string(result.objective);
    doc["nonpreemptive"] = args.nonpreemptive;
    doc["horizon"] = result.schedule.horizon;
    doc["slots"] = nlohmann::ordered_json::array();
    for (const auto& slot : result.schedule.slots) {
      auto ids = nlohmann::ordered_json::array();
      for (int j : slot) ids.push_back(inst.original_ids[j]);
      doc["slots"].push_back(ids);
    }
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }
  std::cout << "objective " << result.objective << '\n';
  for (int t = 0; t < result.schedule.horizon; ++t) {
    const auto& slot = result.schedule.slots[t];
    if (slot.empty()) continue;
    std::cout << "slot " << t << ':';
    for (int j : slot) std::cout << ' ' << inst.original_ids[j];
    std::cout << '\n';
  }
  return kOk;
}

struct ValidateArgs {
  std::string in;
  std::string schedule;
  std::vector<std::string> checks{"all"};
};

int cmd_validate(const ValidateArgs& args) {
  const Instance inst = load_instance(args.in);
  const IntervalSchedule sched = load_schedule(args.schedule, inst);

  const auto wanted = [&](const std::string& name) {
    return std::find(args.checks.begin(), args.checks.end(), name) != args.checks.end() ||
           std::find(args.checks.begin(), args.checks.end(), "all") != args.checks.end();
  };
  bool all_pass = true;
  const auto print = [&](const std::string& name, bool passed, const std::string& witness) {
    all_pass = all_pass && passed;
    std::cout << "check " << name << ' ' << (passed ? "pass" : "fail");
    if (!witness.empty()) std::cout << " (" << witness << ')';
    std::cout << '\n';
  };
  const auto run = [&](const std::string& name, auto&& predicate) {
    if (!wanted(name)) return;
    try {
      const Verdict v = predicate(sched, inst);
      print(name, v.holds, v.witness);
    } catch (const std::exception& e) {
      print(name, false, e.what());
    }
  };

  if (wanted("feasible")) {
    for (const auto& check : validate(sched, inst).checks) print("feasible/" + check.name, check.passed, check.witness);
  }
  run("normal", [](const IntervalSchedule& s, const Instance& i) { return is_normal(s, i); });
  run("left-adjusted", is_left_adjusted);
  run("irreducible", is_irreducible);
  run("tidy", is_tidy);
  return all_pass ? kOk : kFailed;
}

struct CompareArgs {
  bool exhaustive = false;
  bool random = false;
  int n_max = 1, m_max = 1, p_max = 1, r_max = 0;
  int count = 0;
  std::uint64_t seed = 0;
  bool nonpreemptive = false;
  int threads = 1;
  bool verbose = false;
};

int cmd_compare(const CompareArgs& args) {
  if (args.exhaustive == args.random) throw InputError("compare needs exactly one of --exhaustive or --random");
  const std::vector<Instance> instances =
      args.exhaustive ? enumerate_instances(args.n_max, args.m_max, args.p_max, args.r_max)
                      : random_instances(args.count, args.seed, args.n_max, args.m_max, args.p_max, args.r_max);
  CompareOptions options;
  options.nonpreemptive = args.nonpreemptive;
  options.transition_cap = transition_cap();
  options.threads = args.threads;
  const CompareSummary summary = run_compare(instances, options);
  std::cout << summary_text(summary, args.verbose);
  return summary.success() ? kOk : kFailed;
}

struct GanttArgs {
  std::string in;
  std::string schedule;
  std::string out = "-";
  bool ascii = false;
};

int cmd_gantt(const GanttArgs& args) {
  const Instance inst = load_instance(args.in);
  const IntervalSchedule sched = load_schedule(args.schedule, inst);
  if (args.ascii) {
    try {
      write_file(args.out, render_ascii(sched, inst));
    } catch (const std::domain_error& e) {
      throw InputError(e.what());
    }
  } else {
    write_file(args.out, render_svg(sched, inst));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preemptive scheduling of equal-length jobs on identical machines (sum of completion times)"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random integer instance");
  gen_cmd->add_option("--n", gen.params.n, "Number of jobs")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", gen.params.m, "Number of machines")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p-max", gen.params.p_max, "Largest processing time")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--r-max", gen.params.r_max, "Largest release time")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen.params.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output file ('-' for stdout)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance with the normal-schedule LP");
  solve_cmd->add_option("--in", solve_args.in, "Instance file")->required();
  solve_cmd->add_option("--out-schedule", solve_args.out_schedule, "Write the schedule here");
  solve_cmd->add_option("--report", solve_args.report, "Report format")->check(CLI::IsMember({"text", "structured"}));
  solve_cmd->add_flag("--float", solve_args.floating, "Floating-point LP, objective only");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum of an integer instance by dynamic programming");
  oracle_cmd->add_option("--in", oracle_args.in, "Instance file")->required();
  oracle_cmd->add_flag("--nonpreemptive", oracle_args.nonpreemptive, "Forbid preemption");
  oracle_cmd->add_option("--report", oracle_args.report, "Report format")->check(CLI::IsMember({"text", "structured"}));

  ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "Check a schedule against an instance");
  validate_cmd->add_option("--in", validate_args.in, "Instance file")->required();
  validate_cmd->add_option("--schedule", validate_args.schedule, "Schedule file")->required();
  validate_cmd->add_option("--check", validate_args.checks, "Checks to run (repeatable)")
      ->check(CLI::IsMember({"feasible", "normal", "irreducible", "tidy", "left-adjusted", "all"}));

  CompareArgs cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Compare LP and oracle optima over many instances");
  compare_cmd->add_flag("--exhaustive", cmp.exhaustive, "Enumerate all instances within the bounds");
  compare_cmd->add_flag("--random", cmp.random, "Draw random instances");
  compare_cmd->add_option("--n-max,--n", cmp.n_max, "Largest job count")->check(CLI::PositiveNumber);
  compare_cmd->add_option("--m-max,--m", cmp.m_max, "Largest machine count")->check(CLI::PositiveNumber);
  compare_cmd->add_option("--p-max", cmp.p_max, "Largest processing time")->check(CLI::PositiveNumber);
  compare_cmd->add_option("--r-max", cmp.r_max, "Largest release time")->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--count", cmp.count, "Random instance count")->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--seed", cmp.seed, "Random seed");
  compare_cmd->add_flag("--nonpreemptive", cmp.nonpreemptive, "Also compare against the nonpreemptive optimum");
  compare_cmd->add_option("--threads", cmp.threads, "Worker threads")->check(CLI::PositiveNumber);
  compare_cmd->add_flag("--verbose", cmp.verbose, "One line per instance");

  GanttArgs gantt;
  auto* gantt_cmd = app.add_subcommand("gantt", "Render a schedule as SVG or ASCII");
  gantt_cmd->add_option("--in", gantt.in, "Instance file")->required();
  gantt_cmd->add_option("--schedule", gantt.schedule, "Schedule file")->required();
  gantt_cmd->add_option("--out", gantt.out, "Output file ('-' for stdout)")->required();
  gantt_cmd->add_flag("--ascii", gantt.ascii, "Text rendering for integer schedules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*solve_cmd) return cmd_solve(solve_args);
    if (*oracle_cmd) return cmd_oracle(oracle_args);
    if (*validate_cmd) return cmd_validate(validate_args);
    if (*compare_cmd) return cmd_compare(cmp);
    if (*gantt_cmd) return cmd_gantt(gantt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
