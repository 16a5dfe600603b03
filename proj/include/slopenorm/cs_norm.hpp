#pragma once

// The Culler-Shalen norm as exact data: the finite sum  sum_i a_i * Delta(., s_i)
// over boundary slopes s_i with positive even weights a_i.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "slopenorm/rational.hpp"
#include "slopenorm/slope.hpp"

namespace slopenorm {

struct NormTerm {
  Slope slope;
  std::int64_t weight = 2;

  friend bool operator==(const NormTerm&, const NormTerm&) = default;
};

/// Validated term list: weights even and >= 2, slopes pairwise distinct,
/// at least two slopes (so the sum is definite).
class CSNormData {
 public:
  /// Throws std::invalid_argument naming the first violated invariant.
  explicit CSNormData(std::vector<NormTerm> terms);

  std::span<const NormTerm> terms() const { return terms_; }
  /// Weight carried by the meridian, 0 if it is not a term.
  std::int64_t meridian_weight() const;

  friend bool operator==(const CSNormData&, const CSNormData&) = default;

 private:
  std::vector<NormTerm> terms_;
};

/// Pairwise-distinct slopes with at least one finite member.
class BoundarySlopeSet {
 public:
  explicit BoundarySlopeSet(std::vector<Slope> slopes);

  std::span<const Slope> slopes() const { return slopes_; }
  bool contains(const Slope& s) const;
  /// Finite members in increasing numerical order.
  std::vector<Slope> finite_sorted() const;
  Rational max_finite() const;
  Rational min_finite() const;

  friend bool operator==(const BoundarySlopeSet&, const BoundarySlopeSet&) = default;

 private:
  std::vector<Slope> slopes_;
};

/// Norm of a slope (always even).
std::int64_t evaluate(const CSNormData& norm, const Slope& r);

/// Norm of the real class x*m + y*l.
template <typename Scalar>
Scalar evaluate_real(const CSNormData& norm, const Eigen::Matrix<Scalar, 2, 1>& v) {
  using std::abs;
  Scalar total(0);
  for (const NormTerm& term : norm.terms()) {
    const Scalar cross = v(0) * Scalar(term.slope.q()) - v(1) * Scalar(term.slope.p());
    total += Scalar(term.weight) * abs(cross);
  }
  return total;
}

inline Rational evaluate_real(const CSNormData& norm, const Rational& x, const Rational& y) {
  return evaluate_real<Rational>(norm, Eigen::Matrix<Rational, 2, 1>(x, y));
}

std::int64_t meridian_norm(const CSNormData& norm);

using Point2Q = Eigen::Matrix<Rational, 2, 1>;

/// Vertices of the unit ball {v : norm(v) <= 1}, counterclockwise, starting
/// from the smallest polar angle in [0, 2pi).
std::vector<Point2Q> unit_ball_vertices(const CSNormData& norm);

struct MinNorm {
  std::int64_t value;
  Slope slope;
};

/// Least norm over slopes other than the meridian. Ties go to the smaller q,
/// then the smaller |p|, then positive p.
MinNorm min_norm_nontrivial(const CSNormData& norm);

/// max - min of the finite members. Throws std::invalid_argument
/// ("diameter undefined") when fewer than two finite slopes are present.
Rational diam(const BoundarySlopeSet& slopes);

}  // namespace slopenorm
