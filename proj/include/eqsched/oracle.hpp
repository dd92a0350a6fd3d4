#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eqsched/instance.hpp"
#include "eqsched/schedule.hpp"

namespace eqsched {

/// Schedule that is constant on every unit slot [t, t+1), t = 0..horizon-1.
struct SlotSchedule {
  int horizon = 0;
  /// Sorted job indices processed throughout each slot.
  std::vector<std::vector<int>> slots;
};

struct OracleOptions {
  /// Once started, a job must run in every slot until it finishes.
  bool nonpreemptive = false;
  /// Bound on horizon * states * 2^n elementary transitions.
  std::uint64_t transition_cap = 100'000'000;
  /// Off: plain recursion over the same recurrence (slow, for cross-checks).
  bool memoize = true;
};

struct OracleResult {
  long long objective = 0;
  SlotSchedule schedule;
};

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact minimum of sum_j C_j over unit-slot schedules with horizon
/// r_n + n p, by dynamic programming over (slot, remaining-work vector).
/// Among optimal schedules the returned one has the lexicographically
/// smallest sequence of per-slot job bitmasks. Throws std::domain_error for
/// non-integer data and OracleCapExceeded past the transition cap.
OracleResult dp_optimum(const Instance& inst, const OracleOptions& options = {});

/// The k-th smallest job of each slot runs on machine k; abutting slots of a
/// job on the same machine are merged.
IntervalSchedule slot_to_interval(const SlotSchedule& ss, const Instance& inst);

}  // namespace eqsched
