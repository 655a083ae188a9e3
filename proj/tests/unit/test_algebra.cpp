#include <gtest/gtest.h>

#include "greenscan/algebra.hpp"
#include "greenscan/errors.hpp"
#include "greenscan/representation.hpp"
#include "greenscan/zoo.hpp"

using namespace greenscan;

TEST(Algebra, A2PathBasis) {
  auto a = zoo::a2();
  ASSERT_EQ(a->total_dim(), 3u);
  EXPECT_EQ(a->basis_label(0), "e1");
  EXPECT_EQ(a->basis_label(1), "e2");
  EXPECT_EQ(a->basis_label(2), "a");
}

TEST(Algebra, MarkovHasNoLengthTwoPaths) {
  auto a = zoo::markov();
  EXPECT_EQ(a->total_dim(), 9u);
  for (const auto& b : a->basis()) EXPECT_LE(b.length(), 1u);
  EXPECT_EQ(projective(a, 0).dims(), (IntVector{1, 0, 2}));
}

TEST(Algebra, KroneckerAndOneVertex) {
  EXPECT_EQ(zoo::kronecker()->total_dim(), 4u);
  EXPECT_EQ(zoo::one_vertex()->total_dim(), 1u);
}

TEST(Algebra, CommutativeSquareIdentifiesParallelPaths) {
  auto a = parse_algebra(
      "algebra square\nvertices 1 2 3 4\n"
      "arrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\n"
      "relation 1 a*b - 1 c*d\n");
  // e1..e4, a, b, c, d, and one class of length two
  EXPECT_EQ(a->total_dim(), 9u);
  EXPECT_EQ(a->basis_between(0, 3).size(), 1u);
  const Element ab = a->reduce({0, 1});
  const Element cd = a->reduce({2, 3});
  EXPECT_EQ(ab, cd);
}

TEST(Algebra, RejectsLengthOneRelation) {
  try {
    parse_algebra("algebra bad\nvertices 1 2\narrow a : 1 -> 2\nrelation 1 a\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("non-admissible"), std::string::npos);
  }
}

TEST(Algebra, ReportsSyntaxErrorPosition) {
  try {
    parse_algebra("algebra bad\nvertices 1 2\narrow a 1 -> 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 9);
  }
}

TEST(Algebra, LoopWithoutRelationsIsInconclusive) {
  AlgebraLimits limits;
  limits.max_path_length = 12;
  EXPECT_THROW(parse_algebra("algebra loop\nvertices 1\narrow x : 1 -> 1\n", limits), BoundExhausted);
}

TEST(Algebra, NilpotentLoop) {
  auto a = parse_algebra("algebra loop\nvertices 1\narrow x : 1 -> 1\nrelation 1 x*x*x\n");
  EXPECT_EQ(a->total_dim(), 3u);
}

TEST(Algebra, EmitRoundTrips) {
  auto a = zoo::markov();
  auto b = parse_algebra(emit_algebra(*a));
  EXPECT_EQ(emit_algebra(*a), emit_algebra(*b));
  EXPECT_EQ(b->total_dim(), 9u);
}

TEST(AlgebraProperty, DimensionSumsAndAssociativity) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto text = seed % 2 ? zoo::random_tree_text(seed, 2 + static_cast<int>(seed % 4))
                               : zoo::random_nakayama_text(seed, 1 + static_cast<int>(seed % 4));
    auto a = parse_algebra(text);
    std::size_t total = 0;
    for (int i = 0; i < a->n(); ++i) {
      const Representation p = projective(a, i);
      for (long d : p.dims()) total += static_cast<std::size_t>(d);
    }
    EXPECT_EQ(total, a->total_dim()) << text;
    const auto nb = static_cast<int>(a->total_dim());
    for (int x = 0; x < nb; ++x)
      for (int y = 0; y < nb; ++y)
        for (int z = 0; z < nb; ++z) {
          const Element ex{{x, Rational(1)}}, ey{{y, Rational(1)}}, ez{{z, Rational(1)}};
          EXPECT_EQ(a->multiply(a->multiply(ex, ey), ez), a->multiply(ex, a->multiply(ey, ez)));
        }
  }
}
