#pragma once

#include "slopenorm/rational.hpp"

namespace slopenorm {

/// Exact sign of sqrt(a) + sqrt(b) - sqrt(c) for non-negative rationals,
/// decided with at most two squarings. Returns -1, 0 or +1.
/// Throws std::invalid_argument on a negative input.
int cmp_sqrt3(const Rational& a, const Rational& b, const Rational& c);

}  // namespace slopenorm
