#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace eqsched {

// Reduced fraction of arbitrary-precision integers. Expression templates are
// disabled so the type composes cleanly with Eigen and plain `auto`.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = std::vector<Rational>;

/// Parses `a` or `a/b` (optional leading '-', b > 0). Returns nullopt on any
/// other input, including decimals.
std::optional<Rational> parse_rational(std::string_view token);

/// Reduced form: `a` when the denominator is 1, else `a/b`.
std::string to_token(const Rational& value);

bool is_integer(const Rational& value);

/// Requires is_integer(value) and that the value fits in 64 bits.
long long to_int64(const Rational& value);

}  // namespace eqsched
