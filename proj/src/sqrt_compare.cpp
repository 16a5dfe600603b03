#include "slopenorm/sqrt_compare.hpp"

#include <stdexcept>

namespace slopenorm {

int cmp_sqrt3(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() < 0 || b.sign() < 0 || c.sign() < 0) {
    throw std::invalid_argument("cmp_sqrt3: negative radicand");
  }
  // Both sides are non-negative, so compare (sqrt a + sqrt b)^2 with c:
  // sign of d + 2 sqrt(ab) where d = a + b - c.
  const Rational d = a + b - c;
  const Rational ab = a * b;
  if (d.sign() >= 0) {
    return (d.sign() == 0 && ab.sign() == 0) ? 0 : 1;
  }
  // d < 0: compare 4ab with d^2.
  const Rational diff = 4 * ab - d * d;
  return diff.sign();
}

}  // namespace slopenorm
