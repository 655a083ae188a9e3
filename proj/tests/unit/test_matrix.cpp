#include <gtest/gtest.h>

#include <random>

#include "greenscan/matrix.hpp"

using namespace greenscan;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) & 1));
  return m;
}

}  // namespace

TEST(Rational, ParsesAndPrintsFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
  EXPECT_EQ(to_fraction_string(Rational(-1, 2)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("2/-3"), std::invalid_argument);
}

TEST(Matrix, RankAndNullspaceOfSmallExample) {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m), 2u);
  Matrix k = nullspace(m);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((m * k).is_zero());
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  Matrix m{{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
  // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0
  EXPECT_EQ(determinant(m), Rational(2 * (-6 - 20) + (-2)));
}

TEST(Matrix, SolveReturnsSolutionOrNothing) {
  Matrix a{{1, 1}, {0, 1}, {1, 2}};
  Matrix b{{3}, {1}, {4}};
  auto x = solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, b);
  Matrix bad{{3}, {1}, {5}};
  EXPECT_FALSE(solve(a, bad));
}

TEST(Matrix, IntersectionAndSumDimensions) {
  Matrix u{{1, 0}, {0, 1}, {0, 0}};
  Matrix v{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(subspace_intersection(u, v).cols(), 1u);
  EXPECT_EQ(subspace_sum(u, v).cols(), 3u);
}

TEST(MatrixProperty, RankNullityAndModularRankAgree) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> sz(1, 7);
    const std::size_t r = static_cast<std::size_t>(sz(rng)), c = static_cast<std::size_t>(sz(rng));
    Matrix m = random_matrix(rng, r, c, 2);
    if (trial % 3 == 0 && r > 1) {
      // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2);
    }
    const std::size_t rk = rank(m);
    const Matrix k = nullspace(m);
    EXPECT_EQ(rk + k.cols(), c);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(fast_rank(m), rk);
    auto mod = rank_mod_p(m, 1000003);
    if (mod) EXPECT_LE(*mod, rk);
    EXPECT_EQ(column_space(m).cols(), rk);
    EXPECT_EQ(column_space(m), column_space(hstack(m, m)));
    if (r == c) EXPECT_EQ(sgn(determinant(m)) != 0, rk == r);
  }
}
