#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "slopenorm/rational.hpp"

namespace slopenorm {

/// A slope on the boundary torus: the primitive class +-(p*m + q*l) in the
/// meridian/longitude basis, i.e. the numerical slope p/q.
///
/// Canonical form: gcd(|p|, q) = 1, q >= 0, and the meridian is (1, 0).
/// Instances can only be built through normalize_slope(), so equality is
/// structural.
class Slope {
 public:
  /// The meridian 1/0.
  Slope() = default;

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  bool is_meridian() const { return q_ == 0; }
  bool is_finite() const { return q_ != 0; }
  /// Distance one from the meridian.
  bool is_integral() const { return q_ == 1; }

  /// The class (p, q) as a column vector; the sign choice is the canonical one.
  template <typename Scalar>
  Eigen::Matrix<Scalar, 2, 1> vector() const {
    return Eigen::Matrix<Scalar, 2, 1>(Scalar(p_), Scalar(q_));
  }

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Lexicographic on (q, p). Not the numerical order; see numeric_less().
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.p_ <=> b.p_;
  }

 private:
  friend Slope normalize_slope(std::int64_t p, std::int64_t q);
  Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

/// Canonical representative of the class +-(p, q).
/// Throws std::invalid_argument ("not a slope" / "not primitive").
Slope normalize_slope(std::int64_t p, std::int64_t q);

inline Slope meridian() { return Slope{}; }
inline Slope longitude() { return normalize_slope(0, 1); }

/// Minimal geometric intersection number |p_r q_s - q_r p_s|.
std::int64_t distance(const Slope& r, const Slope& s);

/// p/q exactly. Throws std::domain_error("infinite slope") on the meridian.
Rational numeric_value(const Slope& r);

/// Order by numerical value with the meridian treated as +infinity.
bool numeric_less(const Slope& a, const Slope& b);

/// Parses "p/q" (sign on p only) or an integer "n" meaning n/1.
Slope parse_slope(std::string_view text);

/// "p/q"; integers keep the "/1" so the text round-trips unambiguously.
std::string to_string(const Slope& r);

std::ostream& operator<<(std::ostream& out, const Slope& r);

}  // namespace slopenorm
