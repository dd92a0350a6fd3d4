#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsched/rational.hpp"

namespace eqsched {

/// Input text that does not conform to a file format. Line and column are
/// 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// n jobs of common length p on m identical machines.
///
/// Jobs are stored in nondecreasing release order (stable with respect to the
/// input order), and every index used by the solver, the oracle and the
/// structure checks is a 0-based position in that order. `original_ids[k]` is
/// the 1-based input position of the job stored at position k.
struct Instance {
  int n = 0;
  int m = 0;
  Rational p;
  RationalVector releases;
  std::vector<int> original_ids;

  /// Canonicalizes `releases` (given in input order) and checks n, m >= 1,
  /// p > 0 and r_j >= 0. Throws std::invalid_argument on violation.
  static Instance make(int machines, Rational processing, RationalVector releases);

  /// r_n + n * p, an upper bound on the last completion of any optimal
  /// schedule; also the right end of the last segment.
  Rational horizon() const;

  bool all_integer() const;
};

/// Same jobs and machines; `original_ids` is not compared because the file
/// format does not carry it.
bool operator==(const Instance& a, const Instance& b);

Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
void write_instance(std::ostream& out, const Instance& inst);
std::string instance_text(const Instance& inst);

/// Compact single-line form used in logs and mismatch lists, e.g.
/// `n=3 m=2 p=2 r=[0,0,1]`.
std::string describe(const Instance& inst);

struct GenParams {
  int n = 1;
  int m = 1;
  int p_max = 1;
  int r_max = 0;
  std::uint64_t seed = 0;
};

/// Deterministic in `seed`: integer p uniform in [1, p_max], integer releases
/// uniform in [0, r_max].
Instance generate_instance(const GenParams& params);

/// Every instance with n <= n_max, m <= m_max, integer p in [1, p_max] and
/// nondecreasing integer releases in [0, r_max], in the order
/// n ascending, then m, then p, then release vectors lexicographically.
std::vector<Instance> enumerate_instances(int n_max, int m_max, int p_max, int r_max);

}  // namespace eqsched
