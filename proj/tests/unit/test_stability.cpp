#include <gtest/gtest.h>

#include "greenscan/errors.hpp"
#include "greenscan/homology.hpp"
#include "greenscan/stability.hpp"
#include "greenscan/universe.hpp"
#include "greenscan/zoo.hpp"

using namespace greenscan;

namespace {

StabilitySpec a2_charge(long a1, long a2) {
  return StabilitySpec::charge(CentralCharge{{Rational(a1), Rational(a2)}, {Rational(1), Rational(1)}});
}

RationalVector q(long x, long y) { return {Rational(x), Rational(y)}; }

}  // namespace

TEST(Stability, ThetaClassifyExamples) {
  auto a = zoo::a2();
  EXPECT_EQ(theta_classify(q(1, -1), projective(a, 0)).cls, StabilityClass::Stable);
  EXPECT_EQ(theta_classify(q(-1, 1), projective(a, 0)).cls, StabilityClass::Unstable);
  EXPECT_EQ(theta_classify(q(1, 1), simple(a, 0)).cls, StabilityClass::Unstable);
  EXPECT_EQ(theta_classify(q(0, 0), projective(a, 0)).cls, StabilityClass::Semistable);
  EXPECT_EQ(theta_classify(q(0, 0), simple(a, 1)).cls, StabilityClass::Stable);
}

TEST(Stability, ChargePhasesCompareByAngle) {
  auto a = zoo::a2();
  const auto spec = a2_charge(1, -1);
  const auto s1 = spec.phase(simple(a, 0)), s2 = spec.phase(simple(a, 1)), p1 = spec.phase(projective(a, 0));
  EXPECT_TRUE(s2 > p1);
  EXPECT_TRUE(p1 > s1);
  EXPECT_TRUE(spec.phase(IntVector{2, 2}) == p1);
  EXPECT_EQ(parse_charge("a=(1,-1);b=(1,1)", 2).a, q(1, -1));
  EXPECT_THROW(parse_charge("a=(1,-1);b=(1,0)", 2), InputError);
}

TEST(Stability, HNFiltrationOfP1) {
  auto a = zoo::a2();
  const auto p1 = projective(a, 0);
  const auto hn = hn_filtration(a2_charge(1, -1), p1);
  ASSERT_EQ(hn.factors.size(), 2u);
  EXPECT_EQ(hn.factors[0].dims(), (IntVector{0, 1}));
  EXPECT_EQ(hn.factors[1].dims(), (IntVector{1, 0}));
  EXPECT_TRUE(hn.phases[0] > hn.phases[1]);
  EXPECT_EQ(max_destab_quotient(a2_charge(1, -1), p1).object.dims(), (IntVector{1, 0}));
  EXPECT_EQ(max_destab_subobject(a2_charge(1, -1), p1).object.dims(), (IntVector{0, 1}));
  const auto flipped = hn_filtration(a2_charge(-1, 1), p1);
  ASSERT_EQ(flipped.factors.size(), 1u);
  EXPECT_EQ(max_destab_quotient(a2_charge(-1, 1), p1).object.dims(), p1.dims());
}

TEST(Stability, StableFactors) {
  auto a = zoo::a2();
  const auto flat = a2_charge(0, 0);
  const auto f = stable_factors(flat, projective(a, 0));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].dims(), (IntVector{0, 1}));
  EXPECT_EQ(f[1].dims(), (IntVector{1, 0}));
  const auto twice = stable_factors(a2_charge(1, -1), power(simple(a, 0), 2));
  EXPECT_EQ(twice.size(), 2u);
  EXPECT_THROW(stable_factors(a2_charge(1, -1), projective(a, 0)), InputError);
}

TEST(Stability, TorsionMembership) {
  auto a = zoo::a2();
  const auto spec = a2_charge(1, -1);
  const auto p = spec.phase(projective(a, 0));
  EXPECT_EQ(torsion_membership(spec, p, simple(a, 1)), TorsionSide::InT);
  EXPECT_EQ(torsion_membership(spec, p, simple(a, 0)), TorsionSide::InF);
  EXPECT_EQ(torsion_membership(spec, spec.phase(simple(a, 0)), projective(a, 0)), TorsionSide::InT);
}

TEST(Stability, ExtractMgsForChargeAndPaths) {
  auto a = zoo::a2();
  const auto u = enumerate_indecomposables(a).modules;
  const auto e = extract_mgs(a2_charge(1, -1), u);
  ASSERT_FALSE(e.refused);
  EXPECT_EQ(e.stables.size(), 2u);
  EXPECT_EQ(e.chain.size(), 3u);
  EXPECT_TRUE(e.endpoints_ok);
  EXPECT_EQ(u[e.stables[0]].dims(), (IntVector{0, 1}));
  const auto straight = extract_mgs(StabilitySpec::path(parse_green_path("(1,1);(-1,-1)", 2)), u);
  EXPECT_TRUE(straight.refused);
  EXPECT_EQ(straight.reason_code, "NOT_DISCRETE");
  const auto g3 = extract_mgs(StabilitySpec::path(parse_green_path("(1,1);(1,-1/2);(-1,-1)", 2)), u);
  ASSERT_FALSE(g3.refused);
  EXPECT_EQ(g3.stables.size(), 3u);
  EXPECT_TRUE(g3.endpoints_ok);
  auto pt = zoo::one_vertex();
  const auto one = extract_mgs(StabilitySpec::charge(CentralCharge{{Rational(0)}, {Rational(1)}}),
                               enumerate_indecomposables(pt).modules);
  EXPECT_EQ(one.chain.size(), 2u);
}

TEST(Stability, NonGreenPathIsRefused) {
  auto a = zoo::a2();
  const auto u = enumerate_indecomposables(a).modules;
  const auto r = extract_mgs(StabilitySpec::path(parse_green_path("(1,1);(-1,-1);(1,1);(-1,-1)", 2)), u);
  EXPECT_TRUE(r.refused);
  EXPECT_EQ(r.reason_code, "NOT_GREEN_PATH");
}

TEST(Stability, SemistableCategoryProbe) {
  auto a = zoo::a2();
  const auto u = enumerate_indecomposables(a).modules;
  const auto p1 = projective(a, 0), p2 = projective(a, 1);
  const auto probe = semistable_category_probe({p1}, {}, {}, u);
  EXPECT_TRUE(probe.consistent());
  EXPECT_EQ(probe.stable_count, 1u);
  const auto full = semistable_category_probe({p1, p2}, {}, {}, u);
  EXPECT_TRUE(full.consistent());
  EXPECT_EQ(full.stable_count, 0u);
  const auto empty = semistable_category_probe({}, {}, {}, u);
  EXPECT_TRUE(empty.consistent());
  for (const auto& e : empty.entries) EXPECT_NE(e.theta_class, StabilityClass::Unstable);
}
