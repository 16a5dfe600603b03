#include "slopenorm/families.hpp"

#include <stdexcept>
#include <string>

namespace slopenorm {
namespace {

void check_twobridge(std::int64_t crossings, std::int64_t chi1, std::int64_t chi2) {
  if (crossings < 3) throw std::invalid_argument("two-bridge: crossing number must be >= 3");
  if (chi1 >= 0 || chi2 >= 0) {
    throw std::invalid_argument("two-bridge: Euler characteristics must be negative");
  }
  if (chi1 + chi2 != 2 - crossings) {
    throw std::invalid_argument("two-bridge: chi1 + chi2 must equal 2 - C");
  }
}

}  // namespace

ManifoldData fig8_dataset() {
  const Slope plus4 = normalize_slope(4, 1);
  const Slope minus4 = normalize_slope(-4, 1);
  return ManifoldData{
      .name = "figure-eight",
      .cusp = make_cusp_lattice(Rational(1), Rational(0), Rational(12), true),
      .norm = CSNormData({{plus4, 2}, {minus4, 2}}),
      .boundary_slopes = BoundarySlopeSet({plus4, minus4}),
      .surfaces = {{plus4, -1, 1, true, true}, {minus4, -1, 1, true, true}},
      .certified_meridian_norm = std::nullopt,
  };
}

ManifoldData pretzel_dataset(std::int64_t n) {
  if (n < 7 || n % 2 == 0) {
    throw std::invalid_argument("pretzel: n must be odd and >= 7 (got " + std::to_string(n) + ")");
  }
  const Slope s1 = normalize_slope(16, 1);
  const Slope s2 = normalize_slope(2 * n + 6, 1);
  ManifoldData data{
      .name = "pretzel(-2,3," + std::to_string(n) + ")",
      .cusp = std::nullopt,
      .norm = std::nullopt,
      .boundary_slopes = BoundarySlopeSet({s1, s2}),
      .surfaces = {{s1, 6 - n, 1, true, true}, {s2, -1, 1, true, true}},
      .certified_meridian_norm = std::nullopt,
  };
  if (n % 3 != 0) data.certified_meridian_norm = 3 * n - 9;
  return data;
}

VerifyReport twobridge_pair(std::int64_t crossings, std::int64_t chi1, std::int64_t chi2) {
  check_twobridge(crossings, chi1, chi2);
  const std::int64_t delta = 2 * crossings;
  const std::int64_t euler_sum = 2 * (-chi1 - chi2);  // = 2C - 4
  const std::int64_t largest = 2 * std::max(-chi1, -chi2);

  VerifyReport report;
  report.statement = "two-bridge C=" + std::to_string(crossings) + " chi=(" +
                     std::to_string(chi1) + ", " + std::to_string(chi2) + ")";
  report.lhs = "Delta = " + std::to_string(delta);
  report.rhs = "2((-chi1) + (-chi2)) = " + std::to_string(euler_sum) +
               " >= max 2(-chi_i)/b_i = " + std::to_string(largest);
  const bool chain = delta >= euler_sum && euler_sum >= largest && euler_sum == 2 * crossings - 4;
  report.comparison = delta > largest ? 1 : delta == largest ? 0 : -1;
  report.margin = Rational(delta - largest);
  report.status = chain ? Status::holds : Status::fails;
  report.details.push_back(prop4_hypothesis(twobridge_dataset(crossings, chi1, chi2)));
  if (!passed(report)) report.witnesses.push_back(report.statement);
  if (!passed(report.details.front())) report.status = Status::fails;
  return report;
}

ManifoldData twobridge_dataset(std::int64_t crossings, std::int64_t chi1, std::int64_t chi2) {
  check_twobridge(crossings, chi1, chi2);
  const Slope s1 = normalize_slope(crossings, 1);
  const Slope s2 = normalize_slope(-crossings, 1);
  return ManifoldData{
      .name = "two-bridge-abstract-C" + std::to_string(crossings),
      .cusp = std::nullopt,
      .norm = std::nullopt,
      .boundary_slopes = BoundarySlopeSet({s1, s2}),
      .surfaces = {{s1, chi1, 1, true, true}, {s2, chi2, 1, true, true}},
      .certified_meridian_norm = std::nullopt,
  };
}

}  // namespace slopenorm
