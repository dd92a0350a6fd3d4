#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqsched/instance.hpp"

namespace eqsched {

struct CompareOptions {
  /// Also run the nonpreemptive oracle and require preemptive <= nonpreemptive.
  bool nonpreemptive = false;
  std::uint64_t transition_cap = 100'000'000;
  int threads = 1;
};

/// LP against oracle on one instance, plus the structural checks on the
/// LP-extracted schedule.
struct InstanceCheck {
  Instance instance;
  Rational lp_objective;
  std::optional<long long> dp_objective;
  std::optional<long long> dp_nonpreemptive;
  std::int64_t pivots = 0;
  std::vector<int> preemptions;
  /// Set when the oracle exceeded its cap; the instance is not compared.
  std::optional<std::string> skipped;
  /// Empty iff every check passed.
  std::vector<std::string> failures;
};

InstanceCheck check_instance(const Instance& inst, const CompareOptions& options = {});

struct Mismatch {
  std::string instance;
  std::string lp;
  std::string dp;
  std::string reason;
};

struct CompareSummary {
  int instances_checked = 0;
  int skipped = 0;
  std::vector<Mismatch> mismatches;
  std::int64_t max_pivots = 0;
  /// Preemptions per job -> number of jobs.
  std::map<int, int> preemption_histogram;
  /// Only with CompareOptions::nonpreemptive.
  int nonpreemptive_strict = 0;
  int nonpreemptive_equal = 0;
  /// One record per input instance, in input order.
  std::vector<InstanceCheck> records;

  bool success() const { return mismatches.empty(); }
};

/// Checks every instance (across `options.threads` workers) and merges the
/// results in input order.
CompareSummary run_compare(const std::vector<Instance>& instances, const CompareOptions& options = {});

/// `count` instances; each draws n in [1, n_max] and m in [1, m_max], then
/// uses generate_instance with the given p_max and r_max.
std::vector<Instance> random_instances(int count, std::uint64_t seed, int n_max, int m_max, int p_max,
                                       int r_max);

std::string summary_text(const CompareSummary& summary, bool per_instance);

}  // namespace eqsched
