#include <gtest/gtest.h>

#include <random>

#include "qcirc/error.hpp"
#include "qcirc/linear.hpp"

namespace qcirc {
namespace {

Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

TEST(LinearMap, DeterminantOfKnownMatrices) {
  EXPECT_EQ(LinearMap::identity(4).determinant(), 1);
  EXPECT_EQ(LinearMap::from_rows({{1, 1}, {0, 1}}).determinant(), 1);
  EXPECT_EQ(LinearMap::from_rows({{0, 1}, {1, 0}}).determinant(), -1);
  EXPECT_EQ(LinearMap::from_rows({{1, 2}, {2, 4}}).determinant(), 0);
  EXPECT_EQ(LinearMap::from_rows({{R(1, 2), R(1, 3)}, {R(1, 4), R(1, 5)}}).determinant(),
            R(1, 10) - R(1, 12));
  EXPECT_EQ(LinearMap::from_rows({{1, 2, 0}, {3, 4, 0}, {0, 0, 5}}).determinant(), -10);
}

// Cofactor expansion as an independent determinant.
Rational cofactor_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      auto& row = minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
    }
    const Rational term = a[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

TEST(LinearMap, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (auto& row : rows) {
      for (auto& v : row) v = R(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 3) + 1);
    }
    EXPECT_EQ(LinearMap::from_rows(rows).determinant(), cofactor_det(rows));
  }
}

TEST(LinearMap, InverseAndProduct) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<Rational> a(n * n);
    for (auto& v : a) v = R(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 2) + 1);
    const LinearMap l(n, a);
    if (!l.is_invertible()) {
      EXPECT_THROW(l.inverse(), Error);
      continue;
    }
    EXPECT_EQ(l * l.inverse(), LinearMap::identity(n));
    EXPECT_EQ(l.inverse() * l, LinearMap::identity(n));
  }
}

TEST(LinearMap, SingularInverseNamesTheError) {
  try {
    LinearMap::from_rows({{1, 2}, {2, 4}}).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularLinearMap);
  }
}

TEST(LinearMap, RejectsBadShapes) {
  EXPECT_THROW(LinearMap(2, std::vector<Rational>(3)), Error);
  EXPECT_THROW(LinearMap::from_rows({{1, 2}, {3}}), Error);
}

TEST(SolveExact, UniqueSolution) {
  const auto x = solve_exact({{2, 1}, {1, 3}}, {3, 5});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], R(4, 5));
  EXPECT_EQ((*x)[1], R(7, 5));
}

TEST(SolveExact, UnderdeterminedSetsFreeVariablesToZero) {
  // x0 + x1 + x2 = 2, x1 + x2 = 1 -> x2 free.
  const auto x = solve_exact({{1, 1, 1}, {0, 1, 1}}, {2, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_EQ((*x)[2], 0);
  EXPECT_EQ(rank_exact({{1, 1, 1}, {0, 1, 1}, {1, 2, 2}}), 2u);
}

TEST(SolveExact, DetectsInconsistency) {
  EXPECT_FALSE(solve_exact({{1, 2}, {2, 4}}, {1, 3}));
  EXPECT_TRUE(solve_exact({{1, 2}, {2, 4}}, {1, 2}));
  // No unknowns: consistent iff every right-hand side vanishes.
  EXPECT_FALSE(solve_exact({{}, {}}, {0, 1}));
  EXPECT_TRUE(solve_exact({{}}, {0}));
}

TEST(SolveExact, RandomSystemsSatisfyEquations) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    std::vector<Rational> x0(cols);
    for (auto& row : a) {
      for (auto& v : row) v = R(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 3) + 1);
    }
    for (auto& v : x0) v = R(static_cast<long>(rng() % 9) - 4, 2);
    std::vector<Rational> b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) b[r] += a[r][c] * x0[c];
    }
    const auto x = solve_exact(a, b);
    ASSERT_TRUE(x);
    for (std::size_t r = 0; r < rows; ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < cols; ++c) s += a[r][c] * (*x)[c];
      EXPECT_EQ(s, b[r]);
    }
  }
}

}  // namespace
}  // namespace qcirc
