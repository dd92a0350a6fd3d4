#pragma once

#include "eqsched/rational.hpp"

namespace eqsched {

/// One (possibly empty) interval [start(j,q), end(j,q)) per job j and machine
/// q, stored as n x m matrices. start == end encodes an empty interval; its
/// position still matters for the ordering conditions.
template <typename Scalar>
struct BasicNormalSchedule {
  MatrixX<Scalar> start;
  MatrixX<Scalar> end;

  BasicNormalSchedule() = default;
  BasicNormalSchedule(Eigen::Index jobs, Eigen::Index machines)
      : start(MatrixX<Scalar>::Zero(jobs, machines)), end(MatrixX<Scalar>::Zero(jobs, machines)) {}

  Eigen::Index jobs() const { return start.rows(); }
  Eigen::Index machines() const { return start.cols(); }

  /// Per-job processed amount, sum over machines of end - start.
  VectorX<Scalar> work() const { return (end - start).rowwise().sum(); }
};

using NormalSchedule = BasicNormalSchedule<Rational>;

}  // namespace eqsched
