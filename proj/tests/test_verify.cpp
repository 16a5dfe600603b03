#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <slopenorm/families.hpp>
#include <slopenorm/verify.hpp>

#include "support.hpp"

using namespace slopenorm;

namespace {

Slope s(const char* text) { return parse_slope(text); }

SurfaceData surface(const char* slope, std::int64_t euler, std::int64_t b = 1) {
  return SurfaceData{s(slope), euler, b, true, true};
}

ManifoldData synthetic(std::vector<NormTerm> terms) {
  std::vector<Slope> slopes;
  for (const NormTerm& t : terms) slopes.push_back(t.slope);
  return ManifoldData{"synthetic", std::nullopt, CSNormData(std::move(terms)),
                      BoundarySlopeSet(std::move(slopes)), {}, std::nullopt};
}

bool brackets(const Slope& hi, const Slope& lo, const CSNormData& norm) {
  return std::all_of(norm.terms().begin(), norm.terms().end(), [&](const NormTerm& t) {
    return numeric_value(lo) <= numeric_value(t.slope) && numeric_value(t.slope) <= numeric_value(hi);
  });
}

}  // namespace

TEST_CASE("verify_norm_ge_length on the figure-eight") {
  const ManifoldData m = fig8_dataset();
  CHECK(verify_norm_ge_length(m, s("4/1")).status == Status::holds);
  CHECK(verify_norm_ge_length(m, s("1/0")).status == Status::holds);
  CHECK(norm_length_ratio_squared(m, s("4/1")) == Rational(256, 28));

  ManifoldData bare = m;
  bare.cusp.reset();
  CHECK(verify_norm_ge_length(bare, s("4/1")).status == Status::not_applicable);
}

TEST_CASE("sweep_norm_ge_length counts every primitive slope") {
  const VerifyReport r = sweep_norm_ge_length(fig8_dataset(), 20);
  CHECK(r.status == Status::holds);
  CHECK(r.lhs == r.rhs);
  CHECK(r.rhs == std::to_string(enumerate_slopes(20).size()));
}

TEST_CASE("enumerate_slopes order") {
  const std::vector<Slope> e = enumerate_slopes(2);
  REQUIRE(e.size() == 8);
  CHECK(e[0] == meridian());
  CHECK(e[1] == s("-2/1"));
  CHECK(e[5] == s("2/1"));
  CHECK(e[6] == s("-1/2"));
  CHECK(e[7] == s("1/2"));
  CHECK(enumerate_slopes(2, false).size() == 7);
}

TEST_CASE("prop4_hypothesis") {
  const VerifyReport pretzel = prop4_hypothesis(pretzel_dataset(7));
  CHECK(pretzel.status == Status::holds);
  CHECK(pretzel.margin == Rational(2));

  ManifoldData none = fig8_dataset();
  for (SurfaceData& surf : none.surfaces) surf.ideal_point = false;
  const VerifyReport missing = prop4_hypothesis(none);
  CHECK(missing.status == Status::fails);
  CHECK_FALSE(missing.witnesses.empty());
}

TEST_CASE("prop6_condition") {
  CHECK(prop6_condition(surface("0/1", -2), surface("4/1", -1)).status == Status::equality);
  CHECK(prop6_condition(surface("0/1", -3), surface("4/1", -1)).status == Status::fails);
  const VerifyReport p = prop6_condition(surface("16/1", -1), surface("20/1", -1));
  CHECK(p.status == Status::holds);
  CHECK(summary_line(p) == "holds: 2*chi = -2 > -b1*b2*Delta = -4");
}

TEST_CASE("verify_prop_length") {
  const CuspLatticeQ f = *fig8_dataset().cusp;
  CHECK(verify_prop_length(f, s("4/1"), s("-4/1")).status == Status::holds);
  const CuspLatticeQ sq = make_cusp_lattice(Rational(1), Rational(0), Rational(1));
  CHECK(verify_prop_length(sq, s("1/1"), s("0/1")).status == Status::holds);
  CHECK(verify_prop_length(sq, s("3/2"), s("3/2")).status == Status::holds);
  CHECK_THROWS_AS(verify_prop_length(sq, meridian(), s("0/1")), std::invalid_argument);
}

TEST_CASE("verify_prop_norm") {
  const ManifoldData m = fig8_dataset();
  const VerifyReport five = verify_prop_norm(*m.norm, s("5/1"), s("-5/1"), m.boundary_slopes);
  CHECK(five.status == Status::equality);
  CHECK(summary_line(five) == "equality: 10 = 10");
  CHECK(verify_prop_norm(*m.norm, s("0/1"), s("0/1"), m.boundary_slopes).status == Status::holds);
  CHECK(verify_prop_norm(*m.norm, s("4/1"), s("-4/1"), m.boundary_slopes).status ==
        Status::equality);
  CHECK_THROWS_AS(verify_prop_norm(*m.norm, meridian(), s("0/1"), m.boundary_slopes),
                  std::invalid_argument);

  // A meridian term adds 2 Delta(r, 1/0) = 2q to each norm, so equality is not asserted.
  const CSNormData with_m({{s("1/0"), 2}, {s("1/1"), 2}, {s("-1/1"), 2}});
  const BoundarySlopeSet b({s("1/0"), s("1/1"), s("-1/1")});
  const VerifyReport r = verify_prop_norm(with_m, s("1/1"), s("-1/1"), b);
  CHECK(r.status == Status::holds);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("verify_thm_length_norm") {
  const ManifoldData m = fig8_dataset();
  const VerifyReport four = verify_thm_length_norm(m, s("4/1"), s("-4/1"));
  CHECK(four.status == Status::holds);
  CHECK(verify_thm_length_norm(m, s("6/1"), s("-6/1")).status == Status::holds);
  const VerifyReport low = verify_thm_length_norm(m, s("0/1"), s("-4/1"));
  CHECK(low.status == Status::not_applicable);
  CHECK(std::find(low.witnesses.begin(), low.witnesses.end(), "4/1") != low.witnesses.end());
}

TEST_CASE("verify_thm_diam") {
  const ManifoldData m = fig8_dataset();
  CHECK(summary_line(verify_thm_diam(m, s("4/1"))) == "holds: 8 > 4");
  CHECK(summary_line(verify_thm_diam(m, s("-4/1"))) == "holds: 8 > 4");
  CHECK_THROWS_AS(verify_thm_diam(m, s("0/1")), std::invalid_argument);

  const ManifoldData syn = synthetic({{s("0/1"), 2}, {s("2/1"), 2}});
  const VerifyReport r = verify_thm_diam(syn, s("0/1"));
  CHECK(r.status == Status::holds);
  CHECK(r.margin == Rational(1));
}

TEST_CASE("verify_cor_ubdiam") {
  const VerifyReport f = verify_cor_ubdiam(fig8_dataset());
  CHECK(f.status == Status::equality);
  CHECK(summary_line(f) == "equality: 8 = 8");
  REQUIRE(f.details.size() == 1);
  CHECK(f.details[0].status == Status::equality);

  const VerifyReport syn = verify_cor_ubdiam(synthetic({{s("0/1"), 2}, {s("2/1"), 2}}));
  CHECK(syn.status == Status::equality);
}

TEST_CASE("corollary_euler") {
  const SurfaceData a = surface("20/1", -1), b = surface("16/1", -1);
  const VerifyReport r = corollary_euler(a.slope, b.slope, a, b);
  CHECK(r.status == Status::holds);
  CHECK(summary_line(r) == "holds: 12 > 4");
  const SurfaceData big = surface("20/1", -100);
  CHECK(corollary_euler(big.slope, b.slope, big, b).status == Status::holds);
  CHECK_THROWS_AS(corollary_euler(b.slope, a.slope, a, b), std::invalid_argument);
}

TEST_CASE("family_ratio_unbounded") {
  const std::vector<std::int64_t> ns{13, 7, 11};
  const VerifyReport r = family_ratio_unbounded(ns);
  CHECK(r.status == Status::holds);
  REQUIRE(r.details.size() == 3);
  CHECK(r.details[0].rhs == "2");
  CHECK(r.details[2].rhs == "5");
  const std::vector<std::int64_t> nine{7, 9};
  CHECK_THROWS_AS(family_ratio_unbounded(nine), std::invalid_argument);
}

TEST_CASE("verify_agol") {
  const CuspLatticeQ f = *fig8_dataset().cusp;
  CHECK(verify_agol(f, surface("4/1", -1)).status == Status::holds);
  CHECK(verify_agol(f, surface("4/1", -1, 2)).status == Status::fails);
}

TEST_CASE("verify_all on the figure-eight passes and never fails without a witness") {
  const std::vector<VerifyReport> all = verify_all(fig8_dataset(), 10);
  CHECK(all.size() >= 10);
  for (const VerifyReport& r : all) {
    CHECK_MESSAGE(passed(r), r.statement);
    if (r.status == Status::fails) CHECK_FALSE(r.witnesses.empty());
  }
}

TEST_CASE("prop-length sharp form holds on random lattices") {
  using Quad = boost::multiprecision::cpp_bin_float_quad;
  testing::Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    const CuspLatticeQ L = testing::random_lattice(rng);
    const Slope r1 = testing::random_slope(rng, 30, true);
    const Slope r2 = testing::random_slope(rng, 30, true);
    const VerifyReport r = verify_prop_length(L, r1, r2);
    CHECK(r.status == Status::holds);
    const Quad a = sqrt(testing::raw_length2(L, r1.p(), r1.q()).convert_to<Quad>()) / r1.q();
    const Quad b = sqrt(testing::raw_length2(L, r2.p(), r2.q()).convert_to<Quad>()) / r2.q();
    const Rational gap = abs(numeric_value(r1) - numeric_value(r2));
    const Quad c = gap.convert_to<Quad>() * sqrt(L.g_mm().convert_to<Quad>());
    CHECK(a + b > c);
  }
}

TEST_CASE("prop-norm and thm3 on random meridian-free norms") {
  testing::Rng rng(52);
  for (int i = 0; i < 300; ++i) {
    const CSNormData n = testing::random_norm(rng, 10, false);
    std::vector<Slope> slopes;
    for (const NormTerm& t : n.terms()) slopes.push_back(t.slope);
    const BoundarySlopeSet b(slopes);
    const Slope r1 = testing::random_slope(rng, 12, true);
    const Slope r2 = testing::random_slope(rng, 12, true);

    const Rational nm(testing::raw_norm(n, 1, 0));
    const Rational lhs = Rational(testing::raw_norm(n, r1.p(), r1.q())) / (r1.q() * nm) +
                         Rational(testing::raw_norm(n, r2.p(), r2.q())) / (r2.q() * nm);
    const Rational rhs = abs(numeric_value(r1) - numeric_value(r2));
    const VerifyReport r = verify_prop_norm(n, r1, r2, b);
    CHECK(lhs >= rhs);
    CHECK(passed(r));
    if (brackets(r1, r2, n) || brackets(r2, r1, n)) CHECK(r.status == Status::equality);
    CHECK((r.status == Status::equality) == (lhs == rhs));

    const ManifoldData m{"random", std::nullopt, n, b, {}, std::nullopt};
    const Rational d = diam(b);
    for (const Slope& slope : slopes) {
      const VerifyReport t = verify_thm_diam(m, slope);
      CHECK(t.status == Status::holds);
      CHECK(d > Rational(testing::raw_norm(n, slope.p(), slope.q())) / (slope.q() * nm));
    }
  }
}
