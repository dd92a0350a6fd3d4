#pragma once

#include <stdexcept>
#include <string>

#include "eqsched/instance.hpp"
#include "eqsched/normal_schedule.hpp"
#include "eqsched/schedule.hpp"

namespace eqsched {

/// Outcome of a structural predicate; `witness` describes the first
/// violation found and is empty when the predicate holds.
struct Verdict {
  bool holds = true;
  std::string witness;

  explicit operator bool() const { return holds; }
};

// All predicates quantify over block representatives: profiles are constant
// on blocks, so the pairwise conditions only need one time point per block.

/// For all times s < t with |X(s)| < m: every j in X(t) with r_j <= s is in X(s).
Verdict is_left_adjusted(const IntervalSchedule& sched, const Instance& inst);

/// Left-adjusted, and max(X(s) - X(t)) < min(X(t) - X(s)) for all s < t with
/// max(empty) = -inf and min(empty) = +inf.
Verdict is_irreducible(const IntervalSchedule& sched, const Instance& inst);

/// end(j,q) <= start(j+1,q) and end(j,q) <= start(j,q-1) for all applicable
/// (j, q), plus start <= end everywhere. Machine 0 here is machine 1 in the
/// usual numbering.
Verdict is_normal(const NormalSchedule& ns);

/// Interval form: at most one piece per (job, machine), and the empty
/// intervals can be placed so that the normal ordering conditions hold.
Verdict is_normal(const IntervalSchedule& sched, const Instance& inst);

/// All completions <= r_n + n p, and within every segment
/// min(X(s) - X(t)) <= min(X(t) - X(s)) for s < t.
Verdict is_tidy(const IntervalSchedule& sched, const Instance& inst);

/// Profile comparator used by the tidy order: P precedes Q iff the smallest
/// element of their symmetric difference belongs to P; equal profiles
/// precede each other. Sets are sorted.
bool profile_precedes(const std::vector<int>& p, const std::vector<int>& q);

class ExchangeError : public std::invalid_argument {
 public:
  enum class Reason { job_order, release, window_order, nonpositive_length, source_window, target_window };
  ExchangeError(Reason reason, const std::string& message)
      : std::invalid_argument(message), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Swaps jobs i < j on windows [s, s+eps) (where j runs and i does not) and
/// [t, t+eps) (where i runs and j does not). Each job takes over the machine
/// of the job it displaces. H_i drops by exactly (t - s) eps / 2.
IntervalSchedule exchange_step(const IntervalSchedule& sched, const Instance& inst, int i, int j,
                               const Rational& s, const Rational& t, const Rational& eps);

/// Repeatedly takes the lexicographically smallest pair i < j with C_i > C_j,
/// finds the latest t < C_i such that i and j run equally long in [t, C_i),
/// and swaps their memberships there. The result has nondecreasing
/// completions and the same objective. Machines are reassigned by index when
/// anything changed. Throws std::logic_error past n^2 rounds.
IntervalSchedule order_completions(const IntervalSchedule& sched, const Instance& inst);

/// Sorts the blocks of every segment by profile_precedes, merging equal
/// profiles. Requires ordered completions no later than r_n + n p (throws
/// std::invalid_argument otherwise).
IntervalSchedule tidify(const IntervalSchedule& sched, const Instance& inst);

}  // namespace eqsched
