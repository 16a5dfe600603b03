#include "slopenorm/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "slopenorm/families.hpp"
#include "slopenorm/sqrt_compare.hpp"

namespace slopenorm {
namespace {

enum class Claim { greater, greater_equal, equal };

Status judge(int sign, Claim claim) {
  switch (claim) {
    case Claim::greater:
      return sign > 0 ? Status::holds : Status::fails;
    case Claim::greater_equal:
      return sign > 0 ? Status::holds : sign == 0 ? Status::equality : Status::fails;
    case Claim::equal:
      return sign == 0 ? Status::equality : Status::fails;
  }
  return Status::fails;
}

VerifyReport compare(std::string statement, const Rational& lhs, const Rational& rhs,
                     Claim claim) {
  VerifyReport report;
  report.statement = std::move(statement);
  report.lhs = to_string(lhs);
  report.rhs = to_string(rhs);
  report.margin = lhs - rhs;
  report.comparison = report.margin->sign();
  report.status = judge(report.comparison, claim);
  return report;
}

VerifyReport not_applicable(std::string statement, std::string why) {
  VerifyReport report;
  report.statement = std::move(statement);
  report.status = Status::not_applicable;
  report.note = std::move(why);
  return report;
}

std::string sqrt_text(const Rational& value) { return "sqrt(" + to_string(value) + ")"; }

/// Folds sub-checks into a parent: any failure fails the parent.
void absorb_failures(VerifyReport& parent) {
  for (const VerifyReport& d : parent.details) {
    if (!passed(d) && parent.status != Status::fails) {
      parent.status = Status::fails;
      if (parent.witnesses.empty()) parent.witnesses.push_back(d.statement);
    }
  }
}

void require_finite(const Slope& r, const char* what) {
  if (r.is_meridian()) {
    throw std::invalid_argument(std::string(what) + ": infinite slope");
  }
}

Rational ratio_term(const CSNormData& norm, const Slope& r, std::int64_t meridian_value) {
  return Rational(evaluate(norm, r)) / Rational(r.q() * meridian_value);
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::holds:
      return "holds";
    case Status::equality:
      return "equality";
    case Status::fails:
      return "fails";
    case Status::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

bool passed(const VerifyReport& report) {
  if (report.status == Status::fails) return false;
  return std::all_of(report.details.begin(), report.details.end(),
                     [](const VerifyReport& d) { return passed(d); });
}

std::string summary_line(const VerifyReport& report) {
  if (report.status == Status::not_applicable) {
    return "not-applicable: " + report.note;
  }
  const char* relation = report.comparison > 0 ? ">" : report.comparison < 0 ? "<" : "=";
  return to_string(report.status) + ": " + report.lhs + " " + relation + " " + report.rhs;
}

std::vector<Slope> enumerate_slopes(std::int64_t range, bool include_meridian) {
  std::vector<Slope> slopes;
  if (include_meridian) slopes.push_back(meridian());
  for (std::int64_t q = 1; q <= range; ++q) {
    for (std::int64_t p = -range; p <= range; ++p) {
      if (std::gcd(p, q) == 1) slopes.push_back(normalize_slope(p, q));
    }
  }
  return slopes;
}

Rational norm_length_ratio_squared(const ManifoldData& manifold, const Slope& r) {
  if (!manifold.cusp || !manifold.norm) {
    throw std::invalid_argument("ratio needs both a cusp and a norm");
  }
  const Rational n(evaluate(*manifold.norm, r));
  return n * n / squared_length(*manifold.cusp, r);
}

VerifyReport verify_norm_ge_length(const ManifoldData& manifold, const Slope& r) {
  const std::string statement = "thm1 " + to_string(r);
  if (!manifold.cusp || !manifold.norm) {
    return not_applicable(statement, "needs both a cusp and a norm");
  }
  const std::int64_t n = evaluate(*manifold.norm, r);
  const Rational len2 = squared_length(*manifold.cusp, r);
  // 9 norm^2 >= 4 len^2
  const Rational lhs = Rational(9) * Rational(n) * Rational(n);
  const Rational rhs = Rational(4) * len2;
  VerifyReport report;
  report.statement = statement;
  report.lhs = std::to_string(n);
  report.rhs = "2/3*" + sqrt_text(len2);
  report.comparison = (lhs - rhs).sign();
  report.status = judge(report.comparison, Claim::greater_equal);
  if (report.status == Status::fails) report.witnesses.push_back(to_string(r));
  return report;
}

VerifyReport sweep_norm_ge_length(const ManifoldData& manifold, std::int64_t range) {
  const std::string statement = "thm1 sweep " + std::to_string(range);
  if (!manifold.cusp || !manifold.norm) {
    return not_applicable(statement, "needs both a cusp and a norm");
  }
  std::int64_t checked = 0;
  std::int64_t holding = 0;
  VerifyReport report;
  report.statement = statement;
  for (const Slope& r : enumerate_slopes(range)) {
    ++checked;
    const VerifyReport single = verify_norm_ge_length(manifold, r);
    if (passed(single)) {
      ++holding;
    } else if (report.witnesses.empty()) {
      report.witnesses.push_back(to_string(r));
    }
  }
  report.lhs = std::to_string(holding);
  report.rhs = std::to_string(checked);
  report.comparison = holding == checked ? 0 : -1;
  report.status = holding == checked ? Status::holds : Status::fails;
  return report;
}

VerifyReport prop4_hypothesis(const ManifoldData& manifold) {
  std::vector<SurfaceData> candidates;
  for (const SurfaceData& s : manifold.surfaces) {
    if (s.ideal_point && s.euler < 0) candidates.push_back(s);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const SurfaceData& a, const SurfaceData& b) {
                     return numeric_less(a.slope, b.slope);
                   });

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const SurfaceData& a = candidates[i];
      const SurfaceData& b = candidates[j];
      if (a.slope == b.slope) continue;
      const std::int64_t delta = distance(a.slope, b.slope);
      const Rational need_a = Rational(2 * -a.euler) / Rational(a.boundary_components);
      const Rational need_b = Rational(2 * -b.euler) / Rational(b.boundary_components);
      const Rational need = std::max(need_a, need_b);
      if (Rational(delta) < need) continue;
      VerifyReport report = compare("prop4", Rational(delta), need, Claim::greater_equal);
      report.lhs = "Delta(" + to_string(a.slope) + ", " + to_string(b.slope) + ") = " +
                   std::to_string(delta);
      report.rhs = "max 2(-chi_i)/b_i = " + to_string(need);
      report.witnesses = {to_string(a.slope), to_string(b.slope)};
      return report;
    }
  }
  VerifyReport report;
  report.statement = "prop4";
  report.status = Status::fails;
  report.comparison = -1;
  report.lhs = "no pair";
  report.rhs = "required pair";
  report.witnesses.push_back("no qualifying pair among " + std::to_string(candidates.size()) +
                             " ideal-point surfaces");
  return report;
}

VerifyReport prop6_condition(const SurfaceData& s1, const SurfaceData& s2) {
  if (s1.slope == s2.slope) throw std::invalid_argument("prop6: surfaces share a slope");
  const std::int64_t delta = distance(s1.slope, s2.slope);
  const Rational bound(-(s1.boundary_components * s2.boundary_components * delta));

  VerifyReport report;
  report.statement = "prop6";
  for (const SurfaceData* s : {&s1, &s2}) {
    VerifyReport part = compare("prop6 chi(" + to_string(s->slope) + ")", Rational(2 * s->euler),
                                bound, Claim::greater_equal);
    part.lhs = "2*chi = " + part.lhs;
    part.rhs = "-b1*b2*Delta = " + part.rhs;
    report.details.push_back(std::move(part));
  }
  // Report the tighter of the two sides at the top level.
  const VerifyReport& tight =
      *report.details[0].margin <= *report.details[1].margin ? report.details[0] : report.details[1];
  report.lhs = tight.lhs;
  report.rhs = tight.rhs;
  report.margin = tight.margin;
  report.comparison = tight.comparison;
  report.status = tight.status;
  if (report.status == Status::fails) report.witnesses.push_back(tight.statement);

  if (s1.boundary_components == 1 && s2.boundary_components == 1) {
    const Rational need = std::max(Rational(2 * -s1.euler), Rational(2 * -s2.euler));
    VerifyReport spanning = compare("prop4 hypothesis (spanning pair)", Rational(delta), need,
                                    Claim::greater_equal);
    report.note = "spanning pair: Delta >= 2(-chi_i)/b_i " + to_string(spanning.status);
    report.details.push_back(std::move(spanning));
  }
  return report;
}

VerifyReport verify_prop_length(const CuspLatticeQ& lattice, const Slope& r1, const Slope& r2) {
  require_finite(r1, "prop-length");
  require_finite(r2, "prop-length");
  const Rational q1(r1.q());
  const Rational q2(r2.q());
  const Rational a = squared_length(lattice, r1) / (q1 * q1);
  const Rational b = squared_length(lattice, r2) / (q2 * q2);
  const Rational diff = numeric_value(r1) - numeric_value(r2);
  const Rational c = diff * diff * lattice.g_mm();

  VerifyReport report;
  report.statement = "prop-length " + to_string(r1) + " " + to_string(r2);
  report.lhs = sqrt_text(a) + " + " + sqrt_text(b);
  report.rhs = sqrt_text(c);
  report.comparison = cmp_sqrt3(a, b, c);
  report.status = judge(report.comparison, Claim::greater);
  if (report.status == Status::fails) report.witnesses = {to_string(r1), to_string(r2)};

  if (lattice.maximal) {
    VerifyReport stated;
    stated.statement = "prop-length stated form (maximal horotorus)";
    stated.lhs = report.lhs;
    stated.rhs = "|r1 - r2| = " + to_string(abs(diff));
    stated.comparison = cmp_sqrt3(a, b, diff * diff);
    stated.status = judge(stated.comparison, Claim::greater);
    report.details.push_back(std::move(stated));
    absorb_failures(report);
  }
  return report;
}

VerifyReport verify_prop_norm(const CSNormData& norm, const Slope& r1, const Slope& r2,
                              const BoundarySlopeSet& boundary) {
  require_finite(r1, "prop-norm");
  require_finite(r2, "prop-norm");
  const std::int64_t nm = meridian_norm(norm);
  const Rational lhs = ratio_term(norm, r1, nm) + ratio_term(norm, r2, nm);
  const Rational v1 = numeric_value(r1);
  const Rational v2 = numeric_value(r2);
  const Rational rhs = abs(v1 - v2);

  const Rational hi = boundary.max_finite();
  const Rational lo = boundary.min_finite();
  const bool brackets = (v1 >= hi && v2 <= lo) || (v2 >= hi && v1 <= lo);
  const bool meridian_free = norm.meridian_weight() == 0;

  VerifyReport report =
      compare("prop-norm " + to_string(r1) + " " + to_string(r2), lhs, rhs,
              brackets && meridian_free ? Claim::equal : Claim::greater_equal);
  if (brackets && !meridian_free) {
    report.note = "equality not asserted: the meridian carries weight";
  } else if (brackets) {
    report.note = "pair brackets the boundary slopes: equality asserted";
  }
  if (report.status == Status::fails) report.witnesses = {to_string(r1), to_string(r2)};
  return report;
}

VerifyReport verify_thm_length_norm(const ManifoldData& manifold, const Slope& r1,
                                    const Slope& r2) {
  const std::string statement = "thm2 " + to_string(r1) + " " + to_string(r2);
  require_finite(r1, "thm2");
  require_finite(r2, "thm2");
  if (!manifold.cusp || !manifold.norm) {
    return not_applicable(statement, "needs both a cusp and a norm");
  }
  if (!manifold.cusp->maximal) {
    return not_applicable(statement, "cusp is not flagged as the maximal horotorus");
  }
  const std::vector<Slope> finite = manifold.boundary_slopes.finite_sorted();
  const Rational v1 = numeric_value(r1);
  const Rational v2 = numeric_value(r2);
  if (v1 < numeric_value(finite.back())) {
    VerifyReport report = not_applicable(statement, "r1 is below the maximal boundary slope");
    report.witnesses.push_back(to_string(finite.back()));
    return report;
  }
  if (v2 > numeric_value(finite.front())) {
    VerifyReport report = not_applicable(statement, "r2 is above the minimal boundary slope");
    report.witnesses.push_back(to_string(finite.front()));
    return report;
  }

  const CuspLatticeQ& lattice = *manifold.cusp;
  const Rational q1(r1.q());
  const Rational q2(r2.q());
  const Rational a = squared_length(lattice, r1) / (q1 * q1);
  const Rational b = squared_length(lattice, r2) / (q2 * q2);
  const Rational diff = v1 - v2;

  VerifyReport length_part;
  length_part.statement = "length side";
  length_part.lhs = sqrt_text(a) + " + " + sqrt_text(b);
  length_part.rhs = to_string(diff);
  length_part.comparison = cmp_sqrt3(a, b, diff * diff);
  length_part.status = judge(length_part.comparison, Claim::greater);

  VerifyReport norm_part = verify_prop_norm(*manifold.norm, r1, r2, manifold.boundary_slopes);
  norm_part.statement = "norm side";

  VerifyReport report;
  report.statement = statement;
  report.lhs = length_part.lhs;
  report.rhs = to_string(diff) + " = " + norm_part.lhs;
  report.comparison = length_part.comparison;
  const bool ok = length_part.status == Status::holds && norm_part.status == Status::equality;
  report.status = ok ? Status::holds : Status::fails;
  if (!ok) report.witnesses = {to_string(r1), to_string(r2)};
  if (r1.is_integral() && r2.is_integral()) {
    report.note = "integral pair: len(r1) + len(r2) > (norm(r1) + norm(r2))/norm(m)";
  }
  report.details.push_back(std::move(length_part));
  report.details.push_back(std::move(norm_part));
  return report;
}

VerifyReport verify_thm_diam(const ManifoldData& manifold, const Slope& r) {
  if (r.is_meridian() || !manifold.boundary_slopes.contains(r)) {
    throw std::invalid_argument("thm3: " + to_string(r) + " is not a finite boundary slope");
  }
  const std::string statement = "thm3 " + to_string(r);
  if (!manifold.norm) return not_applicable(statement, "needs a norm");
  const Rational bound = ratio_term(*manifold.norm, r, meridian_norm(*manifold.norm));
  VerifyReport report = compare(statement, diam(manifold.boundary_slopes), bound, Claim::greater);
  if (report.status == Status::fails) report.witnesses.push_back(to_string(r));
  return report;
}

VerifyReport verify_cor_ubdiam(const ManifoldData& manifold) {
  if (!manifold.norm) return not_applicable("cor-ubdiam", "needs a norm");
  const std::vector<Slope> finite = manifold.boundary_slopes.finite_sorted();
  if (finite.size() < 2) return not_applicable("cor-ubdiam", "needs two finite boundary slopes");

  const CSNormData& norm = *manifold.norm;
  const std::int64_t nm = meridian_norm(norm);
  const Rational d = diam(manifold.boundary_slopes);
  const Rational two_term = ratio_term(norm, finite.back(), nm) + ratio_term(norm, finite.front(), nm);
  Rational largest(0);
  for (const Slope& s : finite) largest = std::max(largest, ratio_term(norm, s, nm));

  VerifyReport report = compare("cor-ubdiam", two_term, d, Claim::greater_equal);
  VerifyReport max_form = compare("cor-ubdiam max form", Rational(2) * largest, d,
                                  Claim::greater_equal);
  report.note = "max form: " + summary_line(max_form);
  report.details.push_back(std::move(max_form));
  absorb_failures(report);
  return report;
}

VerifyReport corollary_euler(const Slope& r1, const Slope& r2, const SurfaceData& s1,
                             const SurfaceData& s2) {
  if (s1.slope != r1 || s2.slope != r2) throw std::invalid_argument("cor-euler: slope mismatch");
  require_finite(r1, "cor-euler");
  require_finite(r2, "cor-euler");
  if (s1.euler >= 0 || s2.euler >= 0) {
    throw std::invalid_argument("cor-euler: non-negative Euler characteristic");
  }
  const Rational chi1(-s1.euler);
  const Rational chi2(-s2.euler);
  const Rational b1(s1.boundary_components);
  const Rational b2(s2.boundary_components);
  const Rational q1(r1.q());
  const Rational q2(r2.q());

  VerifyReport first = compare("cor-euler " + to_string(r1) + " " + to_string(r2),
                               Rational(6) * (chi1 / (b1 * q1) + chi2 / (b2 * q2)),
                               abs(numeric_value(r1) - numeric_value(r2)), Claim::greater);
  VerifyReport second = compare("cor-euler distance form",
                                Rational(6) * (q2 * chi1 / b1 + q1 * chi2 / b2),
                                Rational(distance(r1, r2)), Claim::greater);
  first.note = "distance form: " + summary_line(second);
  first.details.push_back(std::move(second));
  absorb_failures(first);
  if (first.status == Status::fails) first.witnesses = {to_string(r1), to_string(r2)};
  return first;
}

VerifyReport family_ratio_unbounded(std::span<const std::int64_t> n_values) {
  std::vector<std::int64_t> ns(n_values.begin(), n_values.end());
  for (const std::int64_t n : ns) {
    if (n < 7 || n % 2 == 0 || n % 3 == 0) {
      throw std::invalid_argument("pretzel ratio: n = " + std::to_string(n) +
                                  " must be odd, >= 7, and not divisible by 3");
    }
  }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  VerifyReport report;
  report.statement = "pretzel ratio norm(m)/len(m)";
  report.status = Status::holds;
  std::optional<Rational> previous;
  for (const std::int64_t n : ns) {
    const ManifoldData data = pretzel_dataset(n);
    const Rational bound = Rational(*data.certified_meridian_norm) / Rational(6);
    VerifyReport part;
    part.statement = "n = " + std::to_string(n);
    part.lhs = "norm(m)/len(m)";
    part.rhs = to_string(bound);
    part.comparison = 1;
    part.status = Status::holds;
    part.note = "norm(m) = " + std::to_string(*data.certified_meridian_norm) + ", len(m) <= 6";
    if (previous && !(bound > *previous)) {
      part.status = Status::fails;
      report.status = Status::fails;
      report.witnesses.push_back(part.statement);
    }
    previous = bound;
    report.details.push_back(std::move(part));
  }
  if (!report.details.empty()) {
    report.lhs = "norm(m)/len(m)";
    report.rhs = report.details.back().rhs;
    report.comparison = 1;
  }
  return report;
}

VerifyReport verify_agol(const CuspLatticeQ& lattice, const SurfaceData& surface) {
  const Rational b(surface.boundary_components);
  const Rational chi(surface.euler);
  const bool ok = agol_check(lattice, surface);
  VerifyReport report;
  report.statement = "agol " + to_string(surface.slope);
  report.lhs = "len^2*b^2 = " + to_string(squared_length(lattice, surface.slope) * b * b);
  report.rhs = "36*chi^2 = " + to_string(Rational(36) * chi * chi);
  const Rational margin = Rational(36) * chi * chi - squared_length(lattice, surface.slope) * b * b;
  // The bound is "<=": lhs below rhs passes.
  report.comparison = -margin.sign();
  report.status = ok ? (margin.sign() == 0 ? Status::equality : Status::holds) : Status::fails;
  if (!ok) report.witnesses.push_back(to_string(surface.slope));
  return report;
}

std::vector<VerifyReport> verify_all(const ManifoldData& manifold, std::int64_t range) {
  std::vector<VerifyReport> reports;
  const std::vector<Slope> finite = manifold.boundary_slopes.finite_sorted();

  if (manifold.cusp && manifold.norm) reports.push_back(sweep_norm_ge_length(manifold, range));

  if (manifold.cusp && manifold.norm && manifold.cusp->maximal) {
    const Slope r1 = normalize_slope(ceil_to_int(numeric_value(finite.back())), 1);
    const Slope r2 = normalize_slope(floor_to_int(numeric_value(finite.front())), 1);
    reports.push_back(verify_thm_length_norm(manifold, r1, r2));
  }

  if (manifold.norm) {
    for (const Slope& s : finite) reports.push_back(verify_thm_diam(manifold, s));
    if (finite.size() >= 2) {
      reports.push_back(verify_cor_ubdiam(manifold));
      reports.push_back(
          verify_prop_norm(*manifold.norm, finite.back(), finite.front(), manifold.boundary_slopes));
    }
  }

  if (manifold.cusp && finite.size() >= 2) {
    reports.push_back(verify_prop_length(*manifold.cusp, finite.back(), finite.front()));
  }

  if (!manifold.surfaces.empty()) reports.push_back(prop4_hypothesis(manifold));

  if (manifold.surfaces.size() == 2 && manifold.surfaces[0].slope != manifold.surfaces[1].slope) {
    reports.push_back(prop6_condition(manifold.surfaces[0], manifold.surfaces[1]));
  }

  for (std::size_t i = 0; i < manifold.surfaces.size(); ++i) {
    for (std::size_t j = 0; j < manifold.surfaces.size(); ++j) {
      const SurfaceData& a = manifold.surfaces[i];
      const SurfaceData& b = manifold.surfaces[j];
      if (a.slope.is_meridian() || b.slope.is_meridian() || a.euler >= 0 || b.euler >= 0) continue;
      if (!numeric_less(b.slope, a.slope)) continue;
      reports.push_back(corollary_euler(a.slope, b.slope, a, b));
    }
  }

  if (manifold.cusp) {
    for (const SurfaceData& s : manifold.surfaces) {
      if (s.euler < 0) reports.push_back(verify_agol(*manifold.cusp, s));
    }
  }
  return reports;
}

}  // namespace slopenorm
