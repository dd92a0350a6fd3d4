#include "eqsched/rational.hpp"

#include <cctype>
#include <limits>

namespace eqsched {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view token) {
  bool negative = false;
  if (!token.empty() && token.front() == '-') {
    negative = true;
    token.remove_prefix(1);
  }
  const auto slash = token.find('/');
  const std::string_view num = token.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : token.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  const Integer d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational value{Integer{std::string(num)}, d};
  return negative ? Rational{-value} : value;
}

std::string to_token(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

long long to_int64(const Rational& value) {
  if (!is_integer(value)) throw std::domain_error("value is not an integer: " + to_token(value));
  const Integer num = numerator(value);
  if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min()) {
    throw std::out_of_range("integer does not fit in 64 bits: " + num.str());
  }
  return num.convert_to<long long>();
}

}  // namespace eqsched
