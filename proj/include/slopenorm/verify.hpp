#pragma once

// Executable checks for the length/norm inequalities. Every comparison is
// decided exactly (integers, rationals, or cmp_sqrt3); nothing uses a
// tolerance.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slopenorm/manifold.hpp"

namespace slopenorm {

enum class Status { holds, equality, fails, not_applicable };

std::string to_string(Status status);

struct VerifyReport {
  std::string statement;
  Status status = Status::not_applicable;
  /// Exact renderings of both sides, e.g. "8" and "16/4", or "sqrt(28) + sqrt(28)".
  std::string lhs;
  std::string rhs;
  /// Observed sign of lhs - rhs (-1, 0, +1); meaningless when not applicable.
  int comparison = 0;
  std::vector<std::string> witnesses;
  /// lhs - rhs when both sides are rational.
  std::optional<Rational> margin;
  std::string note;
  std::vector<VerifyReport> details;
};

/// True unless the report (or any nested detail) failed.
bool passed(const VerifyReport& report);

/// "holds: 8 > 4" style one-liner.
std::string summary_line(const VerifyReport& report);

/// Meridian first, then 1 <= q <= range with |p| <= range, q ascending then p
/// ascending; primitive pairs only.
std::vector<Slope> enumerate_slopes(std::int64_t range, bool include_meridian = true);

/// norm(r)^2 / len(r)^2, exact. Requires cusp and norm.
Rational norm_length_ratio_squared(const ManifoldData& manifold, const Slope& r);

/// norm(r) >= (2/3) len(r), checked as 9 norm^2 >= 4 len^2.
VerifyReport verify_norm_ge_length(const ManifoldData& manifold, const Slope& r);

/// The same check over enumerate_slopes(range). lhs/rhs carry the counts of
/// passing and checked slopes; the first failure (if any) is the witness.
VerifyReport sweep_norm_ge_length(const ManifoldData& manifold, std::int64_t range);

/// Looks for two ideal-point surfaces with distinct slopes such that
/// Delta(s1, s2) * b_i >= 2(-chi_i) for both.
VerifyReport prop4_hypothesis(const ManifoldData& manifold);

/// 2 chi_i >= -b1 b2 Delta(s1, s2) for i = 1, 2 (two-surface knots).
VerifyReport prop6_condition(const SurfaceData& s1, const SurfaceData& s2);

/// len(r1)/q1 + len(r2)/q2 > |r1 - r2| len(m), plus the |r1 - r2| form when
/// the lattice is maximal.
VerifyReport verify_prop_length(const CuspLatticeQ& lattice, const Slope& r1, const Slope& r2);

/// norm(r1)/(q1 norm(m)) + norm(r2)/(q2 norm(m)) >= |r1 - r2|, with equality
/// asserted when the pair brackets every boundary slope and the meridian
/// carries no weight.
VerifyReport verify_prop_norm(const CSNormData& norm, const Slope& r1, const Slope& r2,
                              const BoundarySlopeSet& boundary);

/// len(r1)/q1 + len(r2)/q2 > |r1 - r2| = (norm(r1)/q1 + norm(r2)/q2)/norm(m)
/// for r1 >= max boundary slope, r2 <= min boundary slope, maximal horotorus.
VerifyReport verify_thm_length_norm(const ManifoldData& manifold, const Slope& r1,
                                    const Slope& r2);

/// diam(B) > norm(r) / (q norm(m)) for a finite boundary slope r.
VerifyReport verify_thm_diam(const ManifoldData& manifold, const Slope& r);

/// Two-term and max-form upper bounds on diam(B).
VerifyReport verify_cor_ubdiam(const ManifoldData& manifold);

/// 6(-chi1/(b1 q1) + -chi2/(b2 q2)) > |r1 - r2| and
/// 6(q2 (-chi1)/b1 + q1 (-chi2)/b2) > Delta(r1, r2).
VerifyReport corollary_euler(const Slope& r1, const Slope& r2, const SurfaceData& s1,
                             const SurfaceData& s2);

/// Certified lower bounds norm(m)/len(m) >= (3n - 9)/6 for (-2, 3, n) pretzel
/// knots, and their growth in n.
VerifyReport family_ratio_unbounded(std::span<const std::int64_t> n_values);

/// Agol's bound as a consistency check between the cusp and one surface.
VerifyReport verify_agol(const CuspLatticeQ& lattice, const SurfaceData& surface);

/// Every applicable check on one manifold. `range` bounds the slope sweep.
std::vector<VerifyReport> verify_all(const ManifoldData& manifold, std::int64_t range);

}  // namespace slopenorm
