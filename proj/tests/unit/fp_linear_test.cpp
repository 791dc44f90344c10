#include <gtest/gtest.h>

#include <random>

#include "plocal/fp_linear.hpp"

namespace {

using namespace plocal;

using Rows = std::vector<std::vector<long long>>;

// Plain Gaussian elimination on a row list, independent of the library.
std::size_t oracle_rank(Rows a, long long p) {
  auto power = [&](long long b, long long e) {
    long long r = 1;
    for (b %= p; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const long long inv = power(a[r][c], p - 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] % p == 0) continue;
      const long long f = a[i][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = ((a[i][k] - f * a[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

DenseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, unsigned p, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<unsigned> value(1, p - 1);
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) < density) m(i, j) = value(rng);
  return m;
}

Rows to_rows(const DenseMatrix& m) {
  Rows out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

TEST(FpLinear, FieldArithmetic) {
  const PrimeField f(7);
  for (FpValue a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.neg(3), 4u);
  EXPECT_EQ(f.sub(2, 5), 4u);
}

TEST(FpLinear, TripletsSumModP) {
  const PrimeField f(3);
  const auto m = SparseMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 0, 2}, {1, 1, 2}, {1, 1, 2}}, f);
  EXPECT_EQ(m.at(0, 0), 0u);
  EXPECT_EQ(m.at(1, 1), 1u);
  EXPECT_EQ(m.nonzeros(), 1u);
}

TEST(FpLinear, RankMatchesOracleOnRandomMatrices) {
  std::mt19937 rng(20240611);
  for (unsigned p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40;
      const double density = (trial % 3 == 0) ? 0.05 : 0.3;
      const auto m = random_matrix(rng, rows, cols, p, density);
      const auto expected = oracle_rank(to_rows(m), p);
      EXPECT_EQ(rank(m.to_sparse(), f), expected);
      EXPECT_EQ(rank(m, f), expected);
      EXPECT_EQ(rank(m.to_sparse().transposed(), f), expected);
    }
  }
}

TEST(FpLinear, LowRankProducts) {
  std::mt19937 rng(7);
  const PrimeField f(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 1 + rng() % 5;
    const auto a = random_matrix(rng, 30, k, 2, 0.5);
    const auto b = random_matrix(rng, k, 30, 2, 0.5);
    const auto ab = a.multiply(b, f);
    EXPECT_LE(rank(ab.to_sparse(), f), k);
    EXPECT_EQ(rank(ab.to_sparse(), f), oracle_rank(to_rows(ab), 2));
    EXPECT_EQ(a.to_sparse().multiply(b.to_sparse(), f), ab.to_sparse());
  }
}

TEST(FpLinear, NullspaceIsKernel) {
  std::mt19937 rng(99);
  for (unsigned p : {2u, 3u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 12, p, 0.4);
      const auto n = nullspace(m, f);
      EXPECT_EQ(n.rows(), m.cols());
      EXPECT_EQ(n.cols() + rank(m, f), m.cols());
      EXPECT_TRUE(m.multiply(n, f).is_zero());
      EXPECT_EQ(rank(n, f), n.cols());
    }
  }
}

TEST(FpLinear, SolveFindsPreimages) {
  std::mt19937 rng(5);
  const PrimeField f(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_matrix(rng, 8, 6, 3, 0.4);
    DenseMatrix x(6, 1);
    for (std::size_t i = 0; i < 6; ++i) x(i, 0) = rng() % 3;
    const auto b = m.multiply(x, f).column(0);
    const auto sol = solve(m, b, f);
    ASSERT_TRUE(sol.has_value());
    DenseMatrix y(6, 1);
    for (std::size_t i = 0; i < 6; ++i) y(i, 0) = (*sol)[i];
    EXPECT_EQ(m.multiply(y, f).column(0), b);
  }
  DenseMatrix zero(2, 2);
  const std::vector<FpValue> b{1, 0};
  EXPECT_FALSE(solve(zero, b, f).has_value());
}

TEST(FpLinear, RowReduceGivesEchelonForm) {
  const PrimeField f(5);
  DenseMatrix m(3, 3);
  m(0, 0) = 2; m(0, 1) = 4;
  m(1, 0) = 1; m(1, 1) = 2;
  m(2, 2) = 3;
  const auto pivots = row_reduce(m, f);
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(m(0, 0), 1u);
  EXPECT_EQ(m(0, 1), 2u);
  EXPECT_EQ(m(1, 2), 1u);
  EXPECT_TRUE(m.column(2)[0] == 0 && m.column(2)[2] == 0);
}

}  // namespace
