#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "eqsched/rational.hpp"

namespace eqsched {

enum class LpRelation { less_equal, equal, greater_equal };
enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::infeasible:
      return "infeasible";
    case LpStatus::unbounded:
      return "unbounded";
  }
  return "unknown";
}

/// Comparison policy for the simplex. Exact for Rational; floating-point
/// scalars get an absolute tolerance.
template <typename Scalar>
struct LpTolerance {
  static bool zero(const Scalar& x) { return x == 0; }
  static bool positive(const Scalar& x) { return x > 0; }
  static bool negative(const Scalar& x) { return x < 0; }
  static bool less(const Scalar& a, const Scalar& b) { return a < b; }
};

template <>
struct LpTolerance<double> {
  static constexpr double eps = 1e-9;
  static bool zero(double x) { return std::abs(x) <= eps; }
  static bool positive(double x) { return x > eps; }
  static bool negative(double x) { return x < -eps; }
  static bool less(double a, double b) { return a < b - eps; }
};

/// minimize objective . x subject to coeffs.row(k) . x (relation[k]) rhs[k];
/// every variable is either >= 0 or free.
template <typename Scalar>
struct LpProblem {
  MatrixX<Scalar> coeffs;
  std::vector<LpRelation> relations;
  VectorX<Scalar> rhs;
  VectorX<Scalar> objective;
  std::vector<bool> free;

  LpProblem() = default;
  LpProblem(Eigen::Index num_vars, Eigen::Index num_rows)
      : coeffs(MatrixX<Scalar>::Zero(num_rows, num_vars)),
        relations(num_rows, LpRelation::less_equal),
        rhs(VectorX<Scalar>::Zero(num_rows)),
        objective(VectorX<Scalar>::Zero(num_vars)),
        free(num_vars, false) {}

  Eigen::Index num_vars() const { return coeffs.cols(); }
  Eigen::Index num_rows() const { return coeffs.rows(); }
};

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  VectorX<Scalar> values;
  Scalar objective_value{0};
  std::int64_t pivots = 0;
};

namespace detail {

// Dense two-phase tableau. Columns: one per nonnegative variable (two for a
// free one), one slack or surplus per inequality row, one artificial per row
// that needs it, and the right-hand side last. Bland's rule on both ends.
template <typename Scalar>
class Tableau {
  using Tol = LpTolerance<Scalar>;

 public:
  explicit Tableau(const LpProblem<Scalar>& prob) : prob_(prob) {
    const Eigen::Index rows = prob.num_rows();
    const Eigen::Index vars = prob.num_vars();

    for (Eigen::Index v = 0; v < vars; ++v) {
      plus_.push_back(structural_++);
      minus_.push_back(prob.free[v] ? structural_++ : -1);
    }
    // Flip rows with negative rhs so every basic value starts nonnegative.
    std::vector<LpRelation> rel(prob.relations);
    std::vector<int> sign(rows, 1);
    Eigen::Index slacks = 0, artificials = 0;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (Tol::negative(prob.rhs(r))) {
        sign[r] = -1;
        if (rel[r] == LpRelation::less_equal) rel[r] = LpRelation::greater_equal;
        else if (rel[r] == LpRelation::greater_equal) rel[r] = LpRelation::less_equal;
      }
      if (rel[r] != LpRelation::equal) ++slacks;
      if (rel[r] != LpRelation::less_equal) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    cols_ = first_artificial_ + artificials;
    t_ = MatrixX<Scalar>::Zero(rows, cols_ + 1);
    basis_.assign(rows, -1);

    Eigen::Index slack = structural_, art = first_artificial_;
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Scalar s(sign[r]);
      for (Eigen::Index v = 0; v < vars; ++v) {
        const Scalar& a = prob.coeffs(r, v);
        if (Tol::zero(a)) continue;
        t_(r, plus_[v]) = s * a;
        if (minus_[v] >= 0) t_(r, minus_[v]) = -(s * a);
      }
      t_(r, cols_) = s * prob.rhs(r);
      if (rel[r] == LpRelation::less_equal) {
        t_(r, slack) = 1;
        basis_[r] = slack++;
      } else {
        if (rel[r] == LpRelation::greater_equal) t_(r, slack++) = -1;
        t_(r, art) = 1;
        basis_[r] = art++;
      }
    }
  }

  LpSolution<Scalar> solve() {
    LpSolution<Scalar> sol;

    // Phase 1: minimize the sum of artificials.
    VectorX<Scalar> cost = VectorX<Scalar>::Zero(cols_);
    for (Eigen::Index c = first_artificial_; c < cols_; ++c) cost(c) = 1;
    load_objective(cost);
    run(cols_, sol.pivots);
    if (Tol::positive(-obj_(cols_))) {
      sol.status = LpStatus::infeasible;
      return sol;
    }
    drive_out_artificials(sol.pivots);

    // Phase 2 over structural and slack columns only.
    cost.setZero();
    for (Eigen::Index v = 0; v < prob_.num_vars(); ++v) {
      cost(plus_[v]) = prob_.objective(v);
      if (minus_[v] >= 0) cost(minus_[v]) = -prob_.objective(v);
    }
    load_objective(cost);
    if (!run(first_artificial_, sol.pivots)) {
      sol.status = LpStatus::unbounded;
      return sol;
    }

    VectorX<Scalar> column_value = VectorX<Scalar>::Zero(cols_);
    for (std::size_t r = 0; r < basis_.size(); ++r) column_value(basis_[r]) = t_(r, cols_);
    sol.values = VectorX<Scalar>::Zero(prob_.num_vars());
    for (Eigen::Index v = 0; v < prob_.num_vars(); ++v) {
      sol.values(v) = column_value(plus_[v]);
      if (minus_[v] >= 0) sol.values(v) -= column_value(minus_[v]);
    }
    sol.objective_value = Scalar(0);
    for (Eigen::Index v = 0; v < prob_.num_vars(); ++v) {
      if (!Tol::zero(prob_.objective(v))) sol.objective_value += prob_.objective(v) * sol.values(v);
    }
    sol.status = LpStatus::optimal;
    return sol;
  }

 private:
  // Reduced costs for `cost` with the current basis priced out.
  void load_objective(const VectorX<Scalar>& cost) {
    obj_ = VectorX<Scalar>::Zero(cols_ + 1);
    obj_.head(cols_) = cost;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const Scalar f = obj_(basis_[r]);
      if (Tol::zero(f)) continue;
      for (Eigen::Index c = 0; c <= cols_; ++c) {
        if (!Tol::zero(t_(r, c))) obj_(c) -= f * t_(r, c);
      }
    }
  }

  // Simplex over columns [0, limit). False when unbounded.
  bool run(Eigen::Index limit, std::int64_t& pivots) {
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index c = 0; c < limit; ++c) {
        if (Tol::negative(obj_(c))) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;

      Eigen::Index leave = -1;
      Scalar best{0};
      for (Eigen::Index r = 0; r < t_.rows(); ++r) {
        if (!Tol::positive(t_(r, enter))) continue;
        Scalar ratio = t_(r, cols_) / t_(r, enter);
        if (leave < 0 || Tol::less(ratio, best) ||
            (!Tol::less(best, ratio) && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Scalar inv = Scalar(1) / t_(row, col);
    std::vector<Eigen::Index> nz;
    for (Eigen::Index c = 0; c <= cols_; ++c) {
      if (Tol::zero(t_(row, c))) {
        t_(row, c) = Scalar(0);
        continue;
      }
      t_(row, c) *= inv;
      nz.push_back(c);
    }
    const auto eliminate = [&](auto&& target) {
      const Scalar f = target(col);
      if (Tol::zero(f)) return;
      for (Eigen::Index c : nz) target(c) -= f * t_(row, c);
      target(col) = Scalar(0);
    };
    for (Eigen::Index r = 0; r < t_.rows(); ++r) {
      if (r != row) eliminate(t_.row(r));
    }
    eliminate(obj_);
    basis_[row] = col;
  }

  void drive_out_artificials(std::int64_t& pivots) {
    for (Eigen::Index r = 0; r < t_.rows(); ++r) {
      if (basis_[r] < first_artificial_) continue;
      Eigen::Index col = -1;
      for (Eigen::Index c = 0; c < first_artificial_; ++c) {
        if (!Tol::zero(t_(r, c))) {
          col = c;
          break;
        }
      }
      if (col >= 0) {
        pivot(r, col);
        ++pivots;
      } else {
        remove_row(r--);  // redundant equality
      }
    }
  }

  void remove_row(Eigen::Index r) {
    const Eigen::Index last = t_.rows() - 1;
    for (Eigen::Index k = r; k < last; ++k) t_.row(k) = t_.row(k + 1);
    t_.conservativeResize(last, Eigen::NoChange);
    basis_.erase(basis_.begin() + r);
  }

  const LpProblem<Scalar>& prob_;
  std::vector<Eigen::Index> plus_, minus_;
  Eigen::Index structural_ = 0;
  Eigen::Index first_artificial_ = 0;
  Eigen::Index cols_ = 0;
  MatrixX<Scalar> t_;
  VectorX<Scalar> obj_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace detail

/// Two-phase dense simplex with Bland's rule. Deterministic for a fixed
/// problem; optimal solutions are basic.
template <typename Scalar>
LpSolution<Scalar> solve_lp(const LpProblem<Scalar>& prob) {
  return detail::Tableau<Scalar>(prob).solve();
}

/// True iff every row holds at `values` under LpTolerance (exactly, for
/// Rational) and nonnegative variables are nonnegative.
template <typename Scalar>
bool satisfies(const LpProblem<Scalar>& prob, const VectorX<Scalar>& values) {
  using Tol = LpTolerance<Scalar>;
  if (values.size() != prob.num_vars()) return false;
  for (Eigen::Index v = 0; v < prob.num_vars(); ++v) {
    if (!prob.free[v] && Tol::negative(values(v))) return false;
  }
  for (Eigen::Index r = 0; r < prob.num_rows(); ++r) {
    Scalar lhs{0};
    for (Eigen::Index v = 0; v < prob.num_vars(); ++v) {
      if (!Tol::zero(prob.coeffs(r, v))) lhs += prob.coeffs(r, v) * values(v);
    }
    const Scalar diff = lhs - prob.rhs(r);
    switch (prob.relations[r]) {
      case LpRelation::less_equal:
        if (Tol::positive(diff)) return false;
        break;
      case LpRelation::equal:
        if (!Tol::zero(diff)) return false;
        break;
      case LpRelation::greater_equal:
        if (Tol::negative(diff)) return false;
        break;
    }
  }
  return true;
}

}  // namespace eqsched
