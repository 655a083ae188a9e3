#include <gtest/gtest.h>

#include <set>

#include "greenscan/errors.hpp"
#include "greenscan/geometry.hpp"
#include "greenscan/zoo.hpp"

using namespace greenscan;

namespace {

struct A2Fixture {
  TauContext ctx{zoo::a2()};
  ExchangeGraph graph = exchange_graph(ctx);
  std::vector<Representation> universe = brick_universe(enumerate_indecomposables(ctx.algebra()));

  std::vector<TauPair> chain(const std::vector<std::size_t>& ids) const {
    std::vector<TauPair> out;
    for (auto v : ids) out.push_back(graph.nodes[v]);
    return out;
  }
  std::vector<std::string> labels(const std::vector<TauPair>& pairs) const {
    std::vector<std::string> out;
    for (const auto& p : pairs) out.push_back(describe(ctx, p));
    return out;
  }
};

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Geometry, A2Chambers) {
  A2Fixture f;
  const ChamberRecord top = chamber_of(f.ctx, f.ctx.projectives_pair());
  EXPECT_EQ(std::set<IntVector>(top.cone.generators.begin(), top.cone.generators.end()),
            (std::set<IntVector>{{1, 0}, {0, 1}}));
  std::set<std::string> bricks;
  for (const auto& w : top.walls) {
    bricks.insert(w.brick.name());
    EXPECT_EQ(w.sign, 1);
  }
  EXPECT_EQ(bricks, (std::set<std::string>{"S(1)", "S(2)"}));
  EXPECT_TRUE(top.sign_partition_ok());

  const ChamberRecord bottom = chamber_of(f.ctx, f.ctx.shifted_pair());
  EXPECT_TRUE(bottom.cone.contains(rv({-1, -2})));
  EXPECT_FALSE(bottom.cone.contains(rv({-1, 0})));
  for (const auto& w : bottom.walls) EXPECT_EQ(w.sign, -1);

  for (const auto& node : f.graph.nodes) {
    const auto rec = chamber_of(f.ctx, node);
    EXPECT_TRUE(rec.sign_partition_ok()) << describe(f.ctx, node);
    EXPECT_EQ(rec.walls.size(), 2u);
    if (describe(f.ctx, node) == "(P(1)+S(1), 0)")
      EXPECT_EQ(std::set<IntVector>(rec.cone.generators.begin(), rec.cone.generators.end()),
                (std::set<IntVector>{{1, 0}, {1, -1}}));
  }
}

TEST(Geometry, A2WallCycle) {
  A2Fixture f;
  std::vector<ChamberRecord> recs;
  for (const auto& node : f.graph.nodes) recs.push_back(chamber_of(f.ctx, node));
  const auto cycle = rank_two_wall_cycle(recs);
  std::vector<std::string> names;
  std::vector<IntVector> rays;
  for (const auto& w : cycle) {
    names.push_back(w.brick.name());
    rays.push_back(w.ray);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"S(1)", "S(2)", "S(1)", "P(1)", "S(2)"}));
  EXPECT_EQ(rays, (std::vector<IntVector>{{0, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}}));
}

TEST(Geometry, WallCertificates) {
  auto a = zoo::a2();
  const auto s2 = wall_certificate(simple(a, 1));
  EXPECT_EQ(s2.status, WallStatus::Certified);
  ASSERT_EQ(s2.rays.size(), 2u);
  EXPECT_EQ(s2.rays[0].second, StabilityClass::Stable);
  EXPECT_EQ(s2.rays[1].second, StabilityClass::Stable);

  const auto p1 = wall_certificate(projective(a, 0));
  EXPECT_EQ(p1.status, WallStatus::Certified);
  ASSERT_EQ(p1.rays.size(), 2u);
  EXPECT_EQ(p1.rays[0].first, rv({1, -1}));
  EXPECT_EQ(p1.rays[0].second, StabilityClass::Stable);
  EXPECT_EQ(p1.rays[1].second, StabilityClass::Unstable);

  auto k = zoo::kronecker();
  const Representation reg(k, {1, 1}, {Matrix{{1}}, Matrix{{0}}}, "R");
  const auto w = wall_certificate(reg);
  EXPECT_EQ(w.status, WallStatus::Certified);
  for (const auto& s : w.support) {
    EXPECT_EQ(dot(s.theta, reg.dims()), 0);
    EXPECT_GT(s.theta[0], 0);
  }
}

TEST(Geometry, PathValidation) {
  A2Fixture f;
  const auto g1 = validate_path(parse_green_path("(1,1);(-1,1);(-1,-1)", 2), f.universe);
  ASSERT_TRUE(g1.pass);
  std::vector<std::string> order;
  for (const auto& e : g1.table) order.push_back(f.universe[e.index].name());
  EXPECT_EQ(order, (std::vector<std::string>{"S(1)", "P(1)", "S(2)"}));

  const auto straight = validate_path(parse_green_path("(1,1);(-1,-1)", 2), f.universe);
  ASSERT_TRUE(straight.pass);
  for (const auto& e : straight.table) EXPECT_EQ(e.time, Rational(1, 2));

  const auto dip = validate_path(parse_green_path("(1,1);(-1,-1);(1,1);(-1,-1)", 2), f.universe);
  EXPECT_FALSE(dip.pass);
  ASSERT_TRUE(dip.offender.has_value());
  EXPECT_EQ(dip.offender_roots.size(), 3u);
}

TEST(Geometry, MgsFromPaths) {
  A2Fixture f;
  const auto g1 = mgs_from_path(f.ctx, f.graph, parse_green_path("(1,1);(-1,1);(-1,-1)", 2), f.universe);
  ASSERT_FALSE(g1.refused) << g1.detail;
  EXPECT_EQ(f.labels(g1.chain), (std::vector<std::string>{"(0, P(1)+P(2))", "(P(2), P(1))", "(P(1)+P(2), 0)"}));
  for (bool b : g1.cone_checked) EXPECT_TRUE(b);

  const auto g2 = mgs_from_path(f.ctx, f.graph, parse_green_path("(1,1);(-1,-1)", 2), f.universe);
  EXPECT_TRUE(g2.refused);
  EXPECT_EQ(g2.reason_code, "NOT_DISCRETE");

  const auto g3 = mgs_from_path(f.ctx, f.graph, parse_green_path("(1,1);(1,-1/2);(-1,-1)", 2), f.universe);
  ASSERT_FALSE(g3.refused) << g3.detail;
  EXPECT_EQ(g3.chain.size(), 4u);
  EXPECT_EQ(describe(f.ctx, g3.chain[2]), "(P(1)+S(1), 0)");

  const auto dip = mgs_from_path(f.ctx, f.graph, parse_green_path("(1,1);(-1,-1);(1,1);(-1,-1)", 2), f.universe);
  EXPECT_TRUE(dip.refused);
  EXPECT_EQ(dip.reason_code, "NOT_GREEN_PATH");
}

TEST(Geometry, PathRoundTrip) {
  A2Fixture f;
  const auto chains = enumerate_mgs(f.graph, 64);
  ASSERT_EQ(chains.chains.size(), 2u);
  for (const auto& ids : chains.chains) {
    const auto chain = f.chain(ids);
    const GreenPath path = path_from_mgs(f.ctx, f.graph, chain, f.universe);
    EXPECT_EQ(path.points().size(), chain.size() + 1);
    const auto back = mgs_from_path(f.ctx, f.graph, path, f.universe);
    EXPECT_EQ(back.chain, chain);
  }
  TauContext one(zoo::one_vertex());
  const auto g = exchange_graph(one);
  const auto c = enumerate_mgs(g, 8);
  ASSERT_EQ(c.chains.size(), 1u);
  std::vector<TauPair> chain{g.nodes[c.chains[0][0]], g.nodes[c.chains[0][1]]};
  const auto u = brick_universe(enumerate_indecomposables(one.algebra()));
  EXPECT_NO_THROW(path_from_mgs(one, g, chain, u));
}

TEST(Geometry, MarkovWitnesses) {
  TauBounds b;
  b.dim_bound = 3;
  TauContext ctx(zoo::markov(), b);
  const auto g = exchange_graph(ctx);
  const auto rep = markov_witness(ctx, g, 12);
  std::set<IntVector> dims;
  for (const auto& w : rep.witnesses) {
    dims.insert(w.dims);
    EXPECT_TRUE(w.certified()) << dims_string(w.dims);
    EXPECT_LT(w.simple_time, w.witness_time);
  }
  EXPECT_EQ(dims, (std::set<IntVector>{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
  EXPECT_TRUE(rep.all_certified());
  EXPECT_EQ(rep.chains_found, 0u);

  EXPECT_THROW(find_markov_triple(*zoo::a2()), InputError);
}

TEST(Geometry, ConjectureProbeA2) {
  A2Fixture f;
  const auto p = probe_conjectures(f.graph, f.ctx, f.universe, 4);
  EXPECT_EQ(p.uncovered, 0u);
  EXPECT_EQ(p.face_pairs, 5u);
  EXPECT_EQ(p.face_pairs_without_edge, 0u);
  EXPECT_EQ(p.samples, 80u);
}
