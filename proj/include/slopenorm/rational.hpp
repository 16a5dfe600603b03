#pragma once

// Exact rational scalar shared by every module, plus the handful of helpers
// the rest of the library needs on top of Boost.Multiprecision.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace slopenorm {

using Integer = boost::multiprecision::mpz_int;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses "n", "-n", "p/q" (q may not be zero). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "n" form, never a decimal.
std::string to_string(const Rational& value);

/// Decimal rendering with 12 significant digits (display only).
std::string to_decimal(const Rational& value);

/// Decimal rendering of sqrt(value), 12 significant digits (display only).
std::string sqrt_decimal(const Rational& value);

/// Largest integer not exceeding value.
std::int64_t floor_to_int(const Rational& value);

/// Smallest integer not below value.
std::int64_t ceil_to_int(const Rational& value);

/// Nearest integer, halves rounded up.
inline std::int64_t round_to_int(const Rational& value) {
  return floor_to_int(value + Rational(1, 2));
}

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace slopenorm
