#include <gtest/gtest.h>

#include "greenscan/homology.hpp"
#include "greenscan/zoo.hpp"
#include "suites/suites.hpp"

namespace {

const std::vector<suites::Fixture>& fixtures() {
  static const auto f = suites::property_fixtures(0xF1);
  return f;
}

void expect_pass(const suites::SuiteResult& r) {
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_GT(r.cases, 0u);
}

}  // namespace

TEST(Property, SeeSaw) { expect_pass(suites::see_saw(fixtures(), 11, 60)); }
TEST(Property, HarderNarasimhan) { expect_pass(suites::hn_uniqueness(fixtures(), 12, 60)); }
TEST(Property, HomVanishing) { expect_pass(suites::hom_vanishing(fixtures(), 13, 8)); }
TEST(Property, TorsionOrthogonality) { expect_pass(suites::torsion_orthogonality(fixtures(), 14, 8)); }
TEST(Property, Unimodularity) { expect_pass(suites::unimodularity(fixtures())); }
TEST(Property, Darkside) { expect_pass(suites::darkside(fixtures(), 15, 30)); }

TEST(Property, TauFormulaOnRandomAlgebra) {
  const auto randoms = suites::random_tau_finite_algebras(0x77, 1);
  ASSERT_EQ(randoms.size(), 1u);
  expect_pass(suites::ar_formula(randoms[0].first, randoms[0].second, 4));
  expect_pass(suites::ar_formula("kronecker", greenscan::zoo::kronecker(), 4));
}

TEST(Property, SemistableCoherenceOnRandomAlgebra) {
  const auto randoms = suites::random_tau_finite_algebras(0x78, 1);
  ASSERT_EQ(randoms.size(), 1u);
  expect_pass(suites::semistable_coherence(randoms[0].first, randoms[0].second, 4));
}

TEST(Property, ScrambledCopyIsIsomorphic) {
  const auto& f = fixtures();
  for (const auto& fx : f)
    for (const auto& m : fx.universe) {
      const auto s = suites::scrambled(m, 5);
      EXPECT_TRUE(greenscan::is_isomorphic(s, m)) << fx.label << " " << m.name();
    }
}
