#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "eqsched/instance.hpp"
#include "eqsched/rational.hpp"

namespace eqsched {

/// Execution of one job on `machine` during [start, end). Machines are
/// 0-based in memory and 1-based in files and messages.
struct Piece {
  int machine = 0;
  Rational start;
  Rational end;

  Rational length() const { return end - start; }
  friend bool operator==(const Piece&, const Piece&) = default;
};

/// A job/machine/interval triple, the row form used by the schedule file.
struct Interval {
  int job = 0;
  int machine = 0;
  Rational start;
  Rational end;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Preemptive schedule as per-job lists of pieces. Job indices follow the
/// instance's sorted order unless stated otherwise.
struct IntervalSchedule {
  int machines = 0;
  std::vector<std::vector<Piece>> jobs;

  IntervalSchedule() = default;
  IntervalSchedule(int job_count, int machine_count) : machines(machine_count), jobs(job_count) {}

  int job_count() const { return static_cast<int>(jobs.size()); }
  void add(int job, int machine, Rational start, Rational end);

  friend bool operator==(const IntervalSchedule&, const IntervalSchedule&) = default;
};

/// Sorts every job's pieces by start and merges pieces that abut on the same
/// machine. Time sets and machine assignment are unchanged.
IntervalSchedule normalized(IntervalSchedule sched);

/// All pieces as rows sorted by (start, machine, job).
std::vector<Interval> intervals(const IntervalSchedule& sched);

struct ValidationReport {
  struct Check {
    std::string name;
    bool passed = true;
    std::string witness;
  };
  std::vector<Check> checks;

  bool ok() const;
  const Check& at(const std::string& name) const;
};

/// Feasibility checks: intervals (well-formed indices and start < end),
/// capacity, release, finite-intervals, work, machine-disjoint, job-disjoint.
/// Violations are reported, never thrown.
ValidationReport validate(const IntervalSchedule& sched, const Instance& inst);

/// C_j = latest piece end of job j. Throws std::invalid_argument for a job
/// without pieces.
RationalVector completions(const IntervalSchedule& sched);
Rational total_completion(const IntervalSchedule& sched);

/// Per job: maximal runs on the time axis minus one. A job that continues on
/// another machine at the same instant is not preempted (see migration_counts).
std::vector<int> preemption_counts(const IntervalSchedule& sched);
/// Per job: machine changes between pieces that abut in time.
std::vector<int> migration_counts(const IntervalSchedule& sched);

/// H_j = 1/2 * integral of t over X^{-1}(j) = sum over pieces (end^2 - start^2) / 4.
RationalVector halfway_vector(const IntervalSchedule& sched);

/// Lexicographic order on equal-length vectors. Throws std::invalid_argument
/// on length mismatch.
std::strong_ordering lex_compare(const RationalVector& a, const RationalVector& b);

/// Maximal constant-profile interval with no release time in its interior.
/// Profiles are sorted job indices.
struct Block {
  Rational start;
  Rational end;
  std::vector<int> profile;

  Rational length() const { return end - start; }
};

/// [start, end) between consecutive distinct release values, the last one
/// ending at the horizon.
struct Segment {
  Rational start;
  Rational end;
  std::vector<Block> blocks;
};

/// Block decomposition over [r_1, r_n + n p), empty profiles included. Throws
/// std::invalid_argument if some job completes after the horizon.
std::vector<Segment> blocks(const IntervalSchedule& sched, const Instance& inst);

/// Same decomposition, but the last segment ends at `end` (which must be past
/// r_n), and ill-placed pieces before r_1 get a leading segment. Used by the
/// structure predicates so they also work on schedules past the horizon.
std::vector<Segment> decompose(const IntervalSchedule& sched, const Instance& inst,
                               const Rational& end);

/// Flattened blocks of all segments in time order.
std::vector<Block> flatten(const std::vector<Segment>& segments);

/// Reassigns machines blockwise so that the k-th smallest job of every
/// profile runs on machine k, then merges abutting pieces.
IntervalSchedule assign_machines_by_index(const IntervalSchedule& sched, const Instance& inst);

/// Relabels jobs from sorted positions to input positions and back.
IntervalSchedule to_input_order(const IntervalSchedule& sched, const Instance& inst);
IntervalSchedule from_input_order(const IntervalSchedule& sched, const Instance& inst);

/// Schedule file v1. Jobs in the file are 1-based input positions; the
/// returned schedule keeps that labeling (use from_input_order to map it onto
/// an instance). The writer emits rows sorted by (start, machine, job).
IntervalSchedule parse_schedule(std::istream& in);
IntervalSchedule parse_schedule_text(const std::string& text);
void write_schedule(std::ostream& out, const IntervalSchedule& sched);
std::string schedule_text(const IntervalSchedule& sched);

}  // namespace eqsched
