#pragma once

// Random instance generators and brute-force oracles shared by the unit tests
// and the acceptance suite. Oracles only use the raw formulas, never the
// library's own search routines.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include <slopenorm/cs_norm.hpp>
#include <slopenorm/cusp_lattice.hpp>
#include <slopenorm/slope.hpp>

namespace testing {

using slopenorm::CSNormData;
using slopenorm::CuspLatticeQ;
using slopenorm::NormTerm;
using slopenorm::Rational;
using slopenorm::Slope;

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
  return Rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline Rational random_positive(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
  return Rational(uniform(rng, 1, num_bound), uniform(rng, 1, den_bound));
}

/// Positive definite Gram matrix, either B^T B for a random rational B or a
/// diagonal-dominated triple.
inline CuspLatticeQ random_lattice(Rng& rng) {
  for (;;) {
    Rational g_mm, g_ml, g_ll;
    if (uniform(rng, 0, 1) == 0) {
      const Rational a = random_rational(rng, 9, 5), b = random_rational(rng, 9, 5);
      const Rational c = random_rational(rng, 9, 5), d = random_rational(rng, 9, 5);
      g_mm = a * a + c * c;
      g_ml = a * b + c * d;
      g_ll = b * b + d * d;
    } else {
      g_mm = random_positive(rng, 40, 9);
      g_ll = random_positive(rng, 40, 9);
      g_ml = random_rational(rng, 20, 9);
    }
    if (g_mm > 0 && g_ll > 0 && g_mm * g_ll - g_ml * g_ml > 0) {
      return slopenorm::make_cusp_lattice(g_mm, g_ml, g_ll, false);
    }
  }
}

/// Primitive pair with |p| <= bound and 0 <= q <= bound; q >= 1 when finite_only.
inline Slope random_slope(Rng& rng, std::int64_t bound, bool finite_only) {
  for (;;) {
    const std::int64_t p = uniform(rng, -bound, bound);
    const std::int64_t q = uniform(rng, finite_only ? 1 : 0, bound);
    if ((p != 0 || q != 0) && std::gcd(p, q) == 1) return slopenorm::normalize_slope(p, q);
  }
}

/// 2 to 5 distinct slopes with weights in {2, 4, 6}.
inline CSNormData random_norm(Rng& rng, std::int64_t slope_bound, bool allow_meridian) {
  for (;;) {
    const std::int64_t count = uniform(rng, 2, 5);
    std::vector<NormTerm> terms;
    while (static_cast<std::int64_t>(terms.size()) < count) {
      const Slope s = random_slope(rng, slope_bound, !allow_meridian);
      const bool seen = std::any_of(terms.begin(), terms.end(),
                                    [&](const NormTerm& t) { return t.slope == s; });
      if (!seen) terms.push_back({s, 2 * uniform(rng, 1, 3)});
    }
    return CSNormData(std::move(terms));
  }
}

inline std::int64_t raw_delta(std::int64_t p, std::int64_t q, std::int64_t t, std::int64_t u) {
  const std::int64_t d = p * u - q * t;
  return d < 0 ? -d : d;
}

/// Sum of a_i |p u_i - q t_i| straight from the term list.
inline std::int64_t raw_norm(const CSNormData& norm, std::int64_t p, std::int64_t q) {
  std::int64_t total = 0;
  for (const NormTerm& term : norm.terms()) {
    total += term.weight * raw_delta(p, q, term.slope.p(), term.slope.q());
  }
  return total;
}

inline Rational raw_length2(const CuspLatticeQ& lattice, std::int64_t p, std::int64_t q) {
  return Rational(p * p) * lattice.g_mm() + Rational(2 * p * q) * lattice.g_ml() +
         Rational(q * q) * lattice.g_ll();
}

/// Deterministic tie order for minimisers: meridian, then smaller q, then
/// smaller |p|, then positive p.
inline bool tie_order(const Slope& a, const Slope& b) {
  if (a.is_meridian() != b.is_meridian()) return a.is_meridian();
  if (a.q() != b.q()) return a.q() < b.q();
  if (std::abs(a.p()) != std::abs(b.p())) return std::abs(a.p()) < std::abs(b.p());
  return a.p() > b.p();
}

struct BruteMin {
  Rational value;
  std::vector<Slope> minimisers;

  Slope preferred() const { return *std::min_element(minimisers.begin(), minimisers.end(), tie_order); }
};

/// Minimum squared length over all slopes with |p|, q <= bound.
inline BruteMin brute_systole(const CuspLatticeQ& lattice, std::int64_t bound) {
  BruteMin best{Rational(-1), {}};
  for (std::int64_t q = 0; q <= bound; ++q) {
    for (std::int64_t p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) != 1 || (q == 0 && p != 1)) continue;
      const Rational v = raw_length2(lattice, p, q);
      if (best.value < 0 || v < best.value) {
        best = {v, {slopenorm::normalize_slope(p, q)}};
      } else if (v == best.value) {
        best.minimisers.push_back(slopenorm::normalize_slope(p, q));
      }
    }
  }
  return best;
}

/// True when every vector of squared length <= g_mm has |p|, |q| <= bound, so
/// brute_systole over that box is exhaustive.
inline bool systole_box_complete(const CuspLatticeQ& lattice, std::int64_t bound) {
  const Rational det = lattice.g_mm() * lattice.g_ll() - lattice.g_ml() * lattice.g_ml();
  const Rational b2(bound * bound);
  return lattice.g_mm() * lattice.g_ll() <= b2 * det && lattice.g_mm() * lattice.g_mm() <= b2 * det;
}

/// Minimum norm over non-meridian slopes with |p|, q <= bound.
inline BruteMin brute_min_norm(const CSNormData& norm, std::int64_t bound) {
  BruteMin best{Rational(-1), {}};
  for (std::int64_t q = 1; q <= bound; ++q) {
    for (std::int64_t p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational v(raw_norm(norm, p, q));
      if (best.value < 0 || v < best.value) {
        best = {v, {slopenorm::normalize_slope(p, q)}};
      } else if (v == best.value) {
        best.minimisers.push_back(slopenorm::normalize_slope(p, q));
      }
    }
  }
  return best;
}

/// Box containing every class of norm <= norm(0/1): two independent linear
/// forms bound |p| and |q| by Cramer's rule.
inline bool min_norm_box_complete(const CSNormData& norm, std::int64_t bound) {
  const std::int64_t ceiling = raw_norm(norm, 0, 1);
  const auto terms = norm.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const std::int64_t ti = terms[i].slope.p(), ui = terms[i].slope.q();
      const std::int64_t tj = terms[j].slope.p(), uj = terms[j].slope.q();
      const std::int64_t det = raw_delta(ti, ui, tj, uj);
      const Rational fi(ceiling, terms[i].weight), fj(ceiling, terms[j].weight);
      const Rational p_max = (Rational(std::abs(ti)) * fj + Rational(std::abs(tj)) * fi) / det;
      const Rational q_max = (Rational(ui) * fj + Rational(uj) * fi) / det;
      if (p_max <= bound && q_max <= bound) return true;
    }
  }
  return false;
}

}  // namespace testing
