#include <gtest/gtest.h>

#include <random>

#include "cdgl/linalg.hpp"

using namespace cdgl;

namespace {

SparseMatrix matrix(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return SparseMatrix::from_rows(r);
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> value(-3, 3);
  std::uniform_int_distribution<int> coin(0, 2);
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) == 0) m.set(r, c, frac(value(rng), 1 + coin(rng)));
  return m;
}

}  // namespace

TEST(Rational, RoundTripsThroughText) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2")), "-2");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
}

TEST(SparseMatrix, StoresNoZeros) {
  SparseMatrix m(2, 2);
  m.set(0, 1, 3);
  m.set(0, 1, 0);
  EXPECT_EQ(m.nonzeros(), 0u);
  EXPECT_THROW(m.set(2, 0, 1), std::out_of_range);
}

TEST(Kernel, EmptyMatrix) { EXPECT_TRUE(kernel_basis(SparseMatrix(0, 0)).empty()); }

TEST(Kernel, IdentityIsInjective) { EXPECT_TRUE(kernel_basis(SparseMatrix::identity(3)).empty()); }

TEST(Kernel, SingleRow) {
  auto k = kernel_basis(matrix({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (std::vector<Rational>{1, -1}));
}

TEST(Solve, Identity) {
  std::vector<Rational> b{1, Rational(2, 3), -5};
  EXPECT_EQ(solve(SparseMatrix::identity(3), b), b);
}

TEST(Solve, Scalar) { EXPECT_EQ(solve(matrix({{2}}), {1}), (std::vector<Rational>{Rational(1, 2)})); }

TEST(Solve, Inconsistent) { EXPECT_FALSE(solve(matrix({{1}, {1}}), {0, 1}).has_value()); }

TEST(Solve, DimensionMismatch) { EXPECT_THROW(solve(matrix({{1}, {1}}), {0}), std::invalid_argument); }

TEST(Rank, Examples) {
  EXPECT_EQ(rank(SparseMatrix(3, 4)), 0u);
  EXPECT_EQ(rank(SparseMatrix::identity(5)), 5u);
  EXPECT_EQ(rank(matrix({{1, 2}, {2, 4}})), 1u);
}

TEST(LinalgProperties, RankNullityAndSolve) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + trial % 6, cols = 1 + (trial * 5) % 7;
    SparseMatrix m = random_matrix(rng, rows, cols);
    auto kernel = kernel_basis(m);
    EXPECT_EQ(rank(m) + kernel.size(), cols);
    for (const auto& v : kernel) {
      for (const auto& entry : m.multiply(v)) EXPECT_EQ(entry, 0);
    }
    std::vector<Rational> x(cols);
    for (auto& e : x) e = frac(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    auto b = m.multiply(x);
    auto y = solve(m, b);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(m.multiply(*y), b);
  }
}
