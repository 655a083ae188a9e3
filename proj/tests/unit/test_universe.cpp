#include <gtest/gtest.h>

#include <set>

#include "../oracles/coxeter.hpp"
#include "greenscan/homology.hpp"
#include "greenscan/universe.hpp"
#include "greenscan/zoo.hpp"

using namespace greenscan;

TEST(Universe, A2HasThreeIndecomposables) {
  auto u = enumerate_indecomposables(zoo::a2());
  ASSERT_EQ(u.modules.size(), 3u);
  EXPECT_TRUE(u.saturated);
  std::set<std::string> names;
  for (const auto& m : u.modules) names.insert(m.name());
  EXPECT_EQ(names, (std::set<std::string>{"S(1)", "S(2)", "P(1)"}));
}

TEST(Universe, LinearA3HasSixIndecomposables) {
  auto u = enumerate_indecomposables(parse_algebra(zoo::linear_a_text(3)));
  EXPECT_EQ(u.modules.size(), 6u);
}

TEST(Universe, KroneckerContainsRigidsAndRegularBricks) {
  UniverseBounds b;
  b.dim_cap = 3;
  auto u = enumerate_indecomposables(zoo::kronecker(), b);
  std::set<IntVector> dims;
  for (const auto& m : u.modules) dims.insert(m.dims());
  for (IntVector d : {IntVector{1, 0}, {0, 1}, {1, 2}, {2, 1}, {1, 1}, {2, 3}, {3, 2}}) EXPECT_TRUE(dims.count(d)) << dims_string(d);
  for (const auto& m : u.modules) EXPECT_TRUE(is_absolutely_indecomposable(m));
}

TEST(TauRigid, A2Catalog) {
  auto c = enumerate_indec_tau_rigid(zoo::a2(), 2);
  std::set<std::string> names;
  for (const auto& m : c.modules) names.insert(m.name());
  EXPECT_EQ(names, (std::set<std::string>{"P(1)", "P(2)", "S(1)"}));
}

TEST(TauRigid, KroneckerCatalogAvoidsTheRegularRay) {
  auto k = zoo::kronecker();
  auto c = enumerate_indec_tau_rigid(k, 3);
  std::set<IntVector> dims;
  for (const auto& m : c.modules) dims.insert(m.dims());
  EXPECT_EQ(dims, (std::set<IntVector>{{0, 1}, {1, 2}, {2, 3}, {1, 0}, {2, 1}, {3, 2}}));
  for (const auto& g : c.g_vectors) EXPECT_NE(g[0], -g[1]);
  for (const auto& m : c.modules)
    if (!is_projective(m)) EXPECT_EQ(tau(m).dims(), oracle::coxeter_tau_dims(k, m.dims()));
}

TEST(TauRigid, SemisimpleCatalogIsTheSimples) {
  auto c = enumerate_indec_tau_rigid(parse_algebra(zoo::semisimple_text(3)), 2);
  ASSERT_EQ(c.modules.size(), 3u);
  for (const auto& m : c.modules) EXPECT_EQ(m.total_dim(), 1u);
}

TEST(TauRigid, MarkovCatalogIsPairwiseDistinct) {
  auto c = enumerate_indec_tau_rigid(zoo::markov(), 3);
  EXPECT_GE(c.modules.size(), 6u);
  for (std::size_t i = 0; i < c.modules.size(); ++i) {
    EXPECT_TRUE(is_tau_rigid_module(c.modules[i]));
    for (std::size_t j = i + 1; j < c.modules.size(); ++j)
      if (c.modules[i].dims() == c.modules[j].dims()) EXPECT_FALSE(is_isomorphic(c.modules[i], c.modules[j]));
  }
}
