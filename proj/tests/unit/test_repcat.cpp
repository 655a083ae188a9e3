#include <gtest/gtest.h>

#include <set>

#include "../oracles/coxeter.hpp"
#include "greenscan/errors.hpp"
#include "greenscan/homology.hpp"
#include "greenscan/submodules.hpp"
#include "greenscan/zoo.hpp"

using namespace greenscan;

namespace {

Representation a2_p1_plus_s2(const AlgebraPtr& a) {
  return parse_module("module m over A2\ndim 1 = 1\ndim 2 = 2\nmap a = [[1],[0]]\n", a);
}

Representation kronecker_module(const AlgebraPtr& k, long x, long y) {
  return Representation(k, {1, 1}, {Matrix{{x}}, Matrix{{y}}});
}

}  // namespace

TEST(Repcat, A2HomDimensions) {
  auto a = zoo::a2();
  const auto p1 = projective(a, 0), s1 = simple(a, 0), s2 = simple(a, 1);
  EXPECT_EQ(hom_dim(p1, s2), 0u);
  EXPECT_EQ(hom_dim(p1, p1), 1u);
  EXPECT_EQ(hom_dim(s2, p1), 1u);
  EXPECT_EQ(hom_basis(s2, p1).size(), 1u);
  EXPECT_EQ(hom_dim(s1, p1), 0u);
}

TEST(Repcat, ModuleFileRoundTrip) {
  auto a = zoo::a2();
  const auto m = a2_p1_plus_s2(a);
  const auto again = parse_module(emit_module(m), a);
  EXPECT_EQ(again.maps(), m.maps());
  EXPECT_THROW(parse_module("module m over other\n", a), InputError);
  EXPECT_THROW(parse_module("module m over A2\ndim 1 = 1\ndim 2 = 1\nmap a = [[1, 2]]\n", a), ParseError);
}

TEST(Repcat, A2Presentations) {
  auto a = zoo::a2();
  const auto s1 = simple(a, 0);
  const Presentation& p = min_projective_presentation(s1);
  EXPECT_EQ(p.p0, std::vector<int>{0});
  EXPECT_EQ(p.p1, std::vector<int>{1});
  EXPECT_TRUE(presentation_is_minimal(p, *a));
  EXPECT_TRUE(min_projective_presentation(projective(a, 0)).p1.empty());
  EXPECT_EQ(g_vector(projective(a, 0)), (IntVector{1, 0}));
  EXPECT_EQ(g_vector(projective(a, 1)), (IntVector{0, 1}));
  EXPECT_EQ(g_vector(s1), (IntVector{1, -1}));
}

TEST(Repcat, PresentationCokernelIsTheModule) {
  auto k = zoo::kronecker();
  for (const auto& m : {simple(k, 0), injective(k, 1), kronecker_module(k, 1, 2)}) {
    const auto pm = presentation_maps(m);
    ASSERT_TRUE(is_morphism(pm.map, pm.p1, pm.p0));
    const auto coker = cokernel(pm.map, pm.p1, pm.p0).first;
    EXPECT_TRUE(is_isomorphic(coker, m));
  }
}

TEST(Repcat, MarkovSimplePresentation) {
  auto m = zoo::markov();
  const Presentation& p = min_projective_presentation(simple(m, 0));
  EXPECT_EQ(p.p0_multiplicities, (IntVector{1, 0, 0}));
  EXPECT_EQ(p.p1_multiplicities, (IntVector{0, 0, 2}));
}

TEST(Repcat, TauOnA2AndKronecker) {
  auto a = zoo::a2();
  EXPECT_TRUE(tau(projective(a, 0)).is_zero());
  EXPECT_TRUE(is_isomorphic(tau(simple(a, 0)), simple(a, 1)));
  auto k = zoo::kronecker();
  EXPECT_EQ(tau(simple(k, 0)).dims(), (IntVector{3, 2}));
  EXPECT_EQ(tau(simple(k, 0)).dims(), oracle::coxeter_tau_dims(k, {1, 0}));
  // the regular brick is fixed by tau
  const auto r = kronecker_module(k, 1, 1);
  EXPECT_TRUE(is_isomorphic(tau(r), r));
}

TEST(Repcat, TraceAndApproximation) {
  auto a = zoo::a2();
  const auto p1 = projective(a, 0), p2 = projective(a, 1), s1 = simple(a, 0), s2 = simple(a, 1);
  EXPECT_EQ(trace(s2, p1).object.dims(), (IntVector{0, 1}));
  EXPECT_EQ(trace(p1, p1).object.dims(), p1.dims());
  EXPECT_EQ(trace(s1, p1).object.dims(), (IntVector{0, 0}));
  auto ap = right_approximation(p1, p2);
  EXPECT_TRUE(is_isomorphic(ap.cokernel, s1));
  EXPECT_TRUE(is_morphism(ap.map, ap.source, p1));
  EXPECT_TRUE(is_isomorphic(right_approximation(p2, p1).cokernel, s2));
  EXPECT_TRUE(right_approximation(p1, direct_sum(p1, s1)).cokernel.is_zero());
}

TEST(Repcat, DecomposeExamples) {
  auto a = zoo::a2();
  const auto m = a2_p1_plus_s2(a);
  Decomposition d = decompose(m);
  ASSERT_EQ(d.summands.size(), 2u);
  EXPECT_EQ(d.summands[0].module.dims(), (IntVector{0, 1}));
  EXPECT_EQ(d.summands[1].module.dims(), (IntVector{1, 1}));
  EXPECT_EQ(decompose(projective(a, 0)).summands.size(), 1u);
  Decomposition ss = decompose(power(simple(a, 0), 2));
  ASSERT_EQ(ss.summands.size(), 1u);
  EXPECT_EQ(ss.summands[0].multiplicity, 2);
}

TEST(Repcat, DecomposeScrambledSum) {
  // P(1) + S(2) + S(2) conjugated by an invertible change of basis at vertex 2
  auto a = zoo::a2();
  Matrix g{{1, 2, 1}, {0, 1, 3}, {1, 0, 1}};
  Matrix base{{1}, {0}, {0}};
  Representation m(a, {1, 3}, {g * base});
  Decomposition d = decompose(m);
  ASSERT_EQ(d.summands.size(), 2u);
  EXPECT_EQ(d.summands[0].module.dims(), (IntVector{0, 1}));
  EXPECT_EQ(d.summands[0].multiplicity, 2);
  EXPECT_FALSE(d.flagged);
}

TEST(Repcat, NonAbsolutelyIndecomposableIsFlagged) {
  // Kronecker module at the irreducible point x^2 + 1
  auto k = zoo::kronecker();
  Representation m(k, {2, 2}, {Matrix{{1, 0}, {0, 1}}, Matrix{{0, -1}, {1, 0}}});
  EXPECT_EQ(end_info(m).top_dim(), 2u);
  Decomposition d = decompose(m);
  ASSERT_EQ(d.summands.size(), 1u);
  EXPECT_TRUE(d.flagged);
  EXPECT_FALSE(is_absolutely_indecomposable(m));
}

TEST(Repcat, IsomorphismTests) {
  auto k = zoo::kronecker();
  EXPECT_TRUE(is_isomorphic(kronecker_module(k, 1, 2), kronecker_module(k, 2, 4)));
  EXPECT_FALSE(is_isomorphic(kronecker_module(k, 1, 2), kronecker_module(k, 1, 3)));
  EXPECT_FALSE(is_isomorphic(kronecker_module(k, 1, 0), kronecker_module(k, 0, 1)));
}

TEST(Repcat, Submodules) {
  auto a = zoo::a2();
  const auto& l = submodules(projective(a, 0));
  EXPECT_TRUE(l.complete);
  std::set<IntVector> dims;
  for (const auto& s : l.submodules) dims.insert(s.dims);
  EXPECT_EQ(dims, (std::set<IntVector>{{0, 0}, {0, 1}, {1, 1}}));
  const auto& l2 = submodules(direct_sum(simple(a, 0), simple(a, 1)));
  EXPECT_TRUE(l2.complete);
  std::set<IntVector> d2;
  for (const auto& s : l2.submodules) d2.insert(s.dims);
  EXPECT_EQ(d2, (std::set<IntVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(Repcat, ProjectivesAndInjectivesHaveExpectedHoms) {
  auto m = zoo::markov();
  for (int i = 0; i < m->n(); ++i) {
    const auto p = projective(m, i);
    const auto inj = injective(m, i);
    for (int j = 0; j < m->n(); ++j) {
      const auto n = injective(m, j);
      EXPECT_EQ(hom_dim(p, n), n.dim(i));
      EXPECT_EQ(hom_dim_direct(p, n), n.dim(i));
      EXPECT_EQ(hom_dim(n, inj), hom_dim_direct(n, inj));
    }
    EXPECT_TRUE(tau(p).is_zero());
  }
}
