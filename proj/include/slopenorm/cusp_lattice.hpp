#pragma once

// Euclidean geometry of a horotorus, expressed through the Gram matrix of its
// translation lattice in the (meridian, longitude) basis. Every length is kept
// squared and every angle as sin^2 so that exact scalars stay exact.
//
// The functions are templated on the scalar so the same code runs on exact
// rationals (the library's working type) and on floating types (used by the
// tests as an independent numerical oracle).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include <Eigen/Core>
#include <Eigen/LU>

#include "slopenorm/rational.hpp"
#include "slopenorm/slope.hpp"
#include "slopenorm/surface.hpp"

namespace slopenorm {

template <typename Scalar>
struct CuspLattice {
  using Matrix = Eigen::Matrix<Scalar, 2, 2>;

  Matrix gram = Matrix::Identity();
  /// Caller asserts this is the maximal horotorus; validated as systole >= 1.
  bool maximal = false;

  const Scalar& g_mm() const { return gram(0, 0); }
  const Scalar& g_ml() const { return gram(0, 1); }
  const Scalar& g_ll() const { return gram(1, 1); }

  friend bool operator==(const CuspLattice& a, const CuspLattice& b) {
    return a.maximal == b.maximal && a.gram == b.gram;
  }
};

using CuspLatticeQ = CuspLattice<Rational>;

template <typename Scalar>
struct SystoleResult {
  Scalar value;
  Slope slope;
};

namespace detail {

template <typename Scalar>
std::int64_t nearest_integer(const Scalar& x) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return static_cast<std::int64_t>(std::floor(x + Scalar(0.5)));
  } else {
    return round_to_int(Rational(x));
  }
}

/// Tie-break for equally short slopes: meridian, then smaller q, then smaller
/// |p|, then positive p.
inline bool preferred(const Slope& a, const Slope& b) {
  if (a.is_meridian() != b.is_meridian()) return a.is_meridian();
  if (a.q() != b.q()) return a.q() < b.q();
  const auto abs_a = a.p() < 0 ? -a.p() : a.p();
  const auto abs_b = b.p() < 0 ? -b.p() : b.p();
  if (abs_a != abs_b) return abs_a < abs_b;
  return a.p() > b.p();
}

}  // namespace detail

template <typename Scalar>
Scalar inner_product(const CuspLattice<Scalar>& lattice, const Slope& r, const Slope& s) {
  return r.vector<Scalar>().dot(lattice.gram * s.vector<Scalar>());
}

/// p^2 g_mm + 2pq g_ml + q^2 g_ll.
template <typename Scalar>
Scalar squared_length(const CuspLattice<Scalar>& lattice, const Slope& r) {
  return inner_product(lattice, r, r);
}

/// Squared Euclidean area of the horotorus (the Gram determinant).
template <typename Scalar>
Scalar area_squared(const CuspLattice<Scalar>& lattice) {
  return lattice.gram.determinant();
}

template <typename Scalar>
Scalar sin_sq_angle(const CuspLattice<Scalar>& lattice, const Slope& r, const Slope& s) {
  const Scalar lr = squared_length(lattice, r);
  const Scalar ls = squared_length(lattice, s);
  const Scalar dot = inner_product(lattice, r, s);
  return (lr * ls - dot * dot) / (lr * ls);
}

/// Exact check of  distance^2 * area^2 == len(r)^2 * len(s)^2 * sin^2(angle).
template <typename Scalar>
bool lemma1_identity(const CuspLattice<Scalar>& lattice, const Slope& r, const Slope& s) {
  const Scalar delta(distance(r, s));
  return delta * delta * area_squared(lattice) ==
         squared_length(lattice, r) * squared_length(lattice, s) * sin_sq_angle(lattice, r, s);
}

/// Shortest slope via Lagrange-Gauss reduction of the Gram matrix.
template <typename Scalar>
SystoleResult<Scalar> systole_squared(const CuspLattice<Scalar>& lattice) {
  using Vec = Eigen::Matrix<std::int64_t, 2, 1>;
  const auto form = [&](const Vec& a, const Vec& b) -> Scalar {
    return a.template cast<Scalar>().dot(lattice.gram * b.template cast<Scalar>());
  };

  Vec b1(1, 0);
  Vec b2(0, 1);
  Scalar n1 = form(b1, b1);
  Scalar n2 = form(b2, b2);
  if (n2 < n1) {
    std::swap(b1, b2);
    std::swap(n1, n2);
  }
  for (;;) {
    const std::int64_t mu = detail::nearest_integer<Scalar>(form(b1, b2) / n1);
    if (mu == 0) break;
    b2 -= mu * b1;
    n2 = form(b2, b2);
    if (!(n2 < n1)) break;
    std::swap(b1, b2);
    std::swap(n1, n2);
  }

  // In a reduced basis every shortest vector is one of these.
  const std::array<Vec, 4> candidates{b1, b2, Vec(b1 + b2), Vec(b1 - b2)};
  SystoleResult<Scalar> best{form(b1, b1), normalize_slope(b1(0), b1(1))};
  for (const Vec& v : candidates) {
    const Scalar value = form(v, v);
    const Slope slope = normalize_slope(v(0), v(1));
    if (value < best.value || (value == best.value && detail::preferred(slope, best.slope))) {
      best = {value, slope};
    }
  }
  return best;
}

/// Validated construction: positive definite, and systole >= 1 when the
/// maximal flag is set. Throws std::invalid_argument.
template <typename Scalar>
CuspLattice<Scalar> make_cusp_lattice(const Scalar& g_mm, const Scalar& g_ml,
                                      const Scalar& g_ll, bool maximal = false) {
  CuspLattice<Scalar> lattice;
  lattice.gram << g_mm, g_ml, g_ml, g_ll;
  lattice.maximal = maximal;
  if (!(g_mm > Scalar(0)) || !(g_ll > Scalar(0)) || !(area_squared(lattice) > Scalar(0))) {
    throw std::invalid_argument("Gram matrix is not positive definite");
  }
  if (maximal && systole_squared(lattice).value < Scalar(1)) {
    throw std::invalid_argument("maximal flag violates length ≥ 1");
  }
  return lattice;
}

/// Agol's bound len(s) <= 6(-chi)/b, compared as len^2 b^2 <= 36 chi^2.
/// Throws std::invalid_argument for a surface with non-negative Euler
/// characteristic.
template <typename Scalar>
bool agol_check(const CuspLattice<Scalar>& lattice, const SurfaceData& surface) {
  if (surface.euler >= 0) throw std::invalid_argument("non-negative Euler characteristic");
  if (surface.boundary_components < 1) throw std::invalid_argument("surface without boundary");
  const Scalar b(surface.boundary_components);
  const Scalar chi(surface.euler);
  return squared_length(lattice, surface.slope) * b * b <= Scalar(36) * chi * chi;
}

}  // namespace slopenorm
