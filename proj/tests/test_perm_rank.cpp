#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permrank/errors.hpp"
#include "permrank/perm_rank.hpp"
#include "permrank/permanent.hpp"
#include "permrank/signed_graph.hpp"

namespace permrank {
namespace {

Matrix ones(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1;
  return m;
}

void expect_valid_witness(const Matrix& a, const PermRankResult& r) {
  ASSERT_EQ(r.rows.size(), r.rank);
  ASSERT_EQ(r.cols.size(), r.rank);
  if (r.rank > 0) ASSERT_NE(r.permanent, 0);
  ASSERT_EQ(permanent_sub(a, r.rows, r.cols), r.permanent);
}

TEST(MatchingBound, Examples) {
  EXPECT_EQ(support_matching_bound(Matrix::from_rows({{0, 1}, {0, 0}})), 1u);
  EXPECT_EQ(support_matching_bound(Matrix::identity(6)), 6u);
  EXPECT_EQ(support_matching_bound(oracle::matrix_B()), 4u);
  EXPECT_EQ(support_matching_bound(Matrix::from_rows({{1, 1, 0}, {0, 0, 0}})), 1u);
  EXPECT_EQ(support_matching_bound(Matrix(0, 0)), 0u);
}

TEST(MatchingBound, SupportPermutationOfB) {
  // 0 <-> 2 and 1 <-> 3 lies on B's support.
  const Matrix b = oracle::matrix_B();
  EXPECT_NE(b(0, 2) * b(2, 0) * b(1, 3) * b(3, 1), 0);
}

TEST(SupportDigraph, ArcsMatchNonzeroPattern) {
  const SupportDigraph g = support_digraph(Matrix::from_rows({{0, 1}, {-2, 0}}));
  EXPECT_EQ(g.n, 2u);
  ASSERT_EQ(g.arcs.size(), 2u);
  EXPECT_EQ(g.arcs[0], std::make_pair(std::size_t{0}, std::size_t{1}));
  EXPECT_EQ(g.arcs[1], std::make_pair(std::size_t{1}, std::size_t{0}));
  EXPECT_THROW(support_digraph(Matrix(1, 2)), InputError);
}

TEST(PermRankExact, MatrixB) {
  const Matrix b = oracle::matrix_B();
  const PermRankResult r = perm_rank_exact(b);
  EXPECT_EQ(r.rank, 3u);
  expect_valid_witness(b, r);
  // Lexicographically first witness: the negative triangle {0, 2, 3}.
  EXPECT_EQ(r.rows, IndexSet({0, 2, 3}));
  EXPECT_EQ(r.cols, IndexSet({0, 2, 3}));
  EXPECT_EQ(r.permanent, -2);
}

TEST(PermRankExact, Examples) {
  EXPECT_EQ(perm_rank_exact(Matrix::zero(4, 4)).rank, 0u);
  EXPECT_TRUE(perm_rank_exact(Matrix::zero(4, 4)).rows.empty());
  EXPECT_EQ(perm_rank_exact(ones(4)).rank, 4u);
  EXPECT_EQ(perm_rank_exact(Matrix::from_rows({{0, 1}, {0, 0}})).rank, 1u);
  // Rectangular.
  EXPECT_EQ(perm_rank_exact(Matrix::from_rows({{1, 1, 0}, {1, -1, 0}})).rank, 1u);
  EXPECT_EQ(perm_rank_exact(Matrix::from_rows({{1, 1, 1}, {1, -1, 0}})).rank, 2u);
}

TEST(PermRankExact, PrincipalOnlyNeedsSquare) {
  EXPECT_THROW(perm_rank_exact(Matrix(2, 3), true), InputError);
}

TEST(PermRankExact, MatchesBruteForceOracle) {
  SplitMix64 rng(51);
  for (int t = 0; t < 250; ++t) {
    const std::size_t r = 1 + rng.below(5);
    const std::size_t c = 1 + rng.below(5);
    Matrix m = oracle::random_matrix(rng, r, c, -1, 1);
    const PermRankResult res = perm_rank_exact(m);
    ASSERT_EQ(res.rank, oracle::brute_perm_rank(m)) << to_string(m);
    expect_valid_witness(m, res);
    ASSERT_LE(res.rank, support_matching_bound(m));
  }
}

TEST(PermRankNonnegative, Examples) {
  EXPECT_EQ(perm_rank_nonnegative(ones(5)), 5u);
  EXPECT_EQ(perm_rank_nonnegative(Matrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})), 3u);
  EXPECT_EQ(perm_rank_nonnegative(Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})), 2u);
  EXPECT_THROW(perm_rank_nonnegative(Matrix::from_rows({{1, -1}, {0, 1}})), InputError);
}

TEST(PermRankProperties, NonnegativeEqualsMatchingBound) {
  SplitMix64 rng(52);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(8);
    Matrix m = oracle::random_matrix(rng, n, n, 0, 2);
    for (auto i = 0u; i < n; ++i)
      for (auto j = 0u; j < n; ++j)
        if (rng.chance(1, 2)) m(i, j) = 0;
    ASSERT_EQ(perm_rank_exact(m).rank, perm_rank_nonnegative(m));
  }
}

TEST(PermRankProperties, PsdPrincipalOnlyAgrees) {
  SplitMix64 rng(53);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + rng.below(7);
    const Matrix g = oracle::random_matrix(rng, n, rng.below(n + 1), -2, 2);
    const Matrix a = g * g.transpose();
    ASSERT_EQ(perm_rank_exact(a, true).rank, perm_rank_exact(a).rank);
  }
}

TEST(PermRankProperties, SwitchingInvarianceAndYuBound) {
  SplitMix64 rng(54);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng.below(7);
    const Matrix a = oracle::random_matrix(rng, n, n, -2, 2);
    std::vector<int> d(n);
    for (auto& x : d) x = rng.sign();
    const std::size_t rho = perm_rank_exact(a).rank;
    ASSERT_EQ(perm_rank_exact(diag_similar(a, SwitchingVector(d))).rank, rho);
    ASSERT_LE(rank_exact(a), 2 * rho);
  }
}

TEST(PermRankProperties, YuBoundIsTight) {
  // per [[1, 1], [1, -1]] = -1 + 1 = 0, so rank 2 = 2 * rho.
  const Matrix h = Matrix::from_rows({{1, 1}, {1, -1}});
  EXPECT_EQ(perm_rank_exact(h).rank, 1u);
  EXPECT_EQ(rank_exact(h), 2u);
}

}  // namespace
}  // namespace permrank
