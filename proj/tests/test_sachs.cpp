#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "permrank/errors.hpp"
#include "permrank/perm_rank.hpp"
#include "permrank/polynomial.hpp"
#include "permrank/sachs.hpp"

namespace permrank {
namespace {

SignedGraph from(const Matrix& m) { return graph_from_matrix(m); }

const Matrix kTriangle = Matrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
const Matrix kNegTriangle = Matrix::from_rows({{0, 1, 1}, {1, 0, -1}, {1, -1, 0}});
const Matrix kBalancedTriangle = Matrix::from_rows({{0, 1, -1}, {1, 0, -1}, {-1, -1, 0}});

std::size_t count_sachs(const SignedGraph& g, std::size_t order) {
  std::size_t c = 0;
  enumerate_sachs(g, order, [&](const SachsSubgraph&) { ++c; });
  return c;
}

SignedGraph random_signed(SplitMix64& rng, std::size_t n) {
  SignedGraph g(n);
  const std::uint64_t num = 1 + rng.below(4);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.chance(num, 4)) g.add_edge(u, v, rng.sign());
  return g;
}

TEST(EnumerateSachs, TriangleCounts) {
  const SignedGraph t = from(kTriangle);
  EXPECT_EQ(count_sachs(t, 0), 1u);
  EXPECT_EQ(count_sachs(t, 1), 0u);
  EXPECT_EQ(count_sachs(t, 2), 3u);
  EXPECT_EQ(count_sachs(t, 3), 1u);
  EXPECT_THROW(count_sachs(t, 4), InputError);
}

TEST(EnumerateSachs, K4Counts) {
  // Order 4 in K4: 3 perfect matchings + 3 Hamiltonian cycles.
  SignedGraph k4(4);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v) k4.add_edge(u, v, 1);
  EXPECT_EQ(count_sachs(k4, 4), 6u);
  EXPECT_EQ(count_sachs(k4, 3), 4u);
  EXPECT_EQ(count_sachs(k4, 2), 6u);
}

TEST(EnumerateSachs, ComponentsAreDisjointHostSubgraphsAndDistinct) {
  SplitMix64 rng(71);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng.below(7);
    const SignedGraph g = random_signed(rng, n);
    for (std::size_t k = 0; k <= n; ++k) {
      std::set<std::vector<std::vector<std::size_t>>> seen;
      enumerate_sachs(g, k, [&](const SachsSubgraph& u) {
        std::vector<bool> used(n, false);
        std::size_t total = 0;
        std::size_t cycles = 0;
        std::size_t negative = 0;
        std::vector<std::vector<std::size_t>> key;
        for (const auto& c : u.components()) {
          for (std::size_t v : c.vertices) {
            ASSERT_FALSE(used[v]);
            used[v] = true;
          }
          total += c.vertices.size();
          if (c.kind == SachsComponent::Kind::Edge) {
            ASSERT_EQ(c.vertices.size(), 2u);
            ASSERT_EQ(g.sign(c.vertices[0], c.vertices[1]), c.sign);
          } else {
            ASSERT_GE(c.vertices.size(), 3u);
            ASSERT_EQ(cycle_sign(g, c.vertices), c.sign);
            ++cycles;
            negative += c.sign < 0;
          }
          key.push_back(c.vertices);
        }
        ASSERT_EQ(total, k);
        ASSERT_EQ(u.vertex_count(), k);
        ASSERT_EQ(u.cycle_count(), cycles);
        ASSERT_EQ(u.negative_cycle_count(), negative);
        std::sort(key.begin(), key.end());
        ASSERT_TRUE(seen.insert(key).second);
      });
    }
  }
}

TEST(SachsCoefficient, Examples) {
  EXPECT_EQ(sachs_coefficient(from(kTriangle), 2), 3);
  EXPECT_EQ(sachs_coefficient(from(kNegTriangle), 3), 2);
  EXPECT_EQ(sachs_coefficient(from(kTriangle), 1), 0);
  EXPECT_EQ(sachs_coefficient(from(kTriangle), 0), 1);
  EXPECT_EQ(sachs_coefficient(from(oracle::matrix_B()), 2), 5);
}

TEST(SachsCoefficient, EqualsPolynomialCoefficients) {
  SplitMix64 rng(72);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(9);
    const SignedGraph g = random_signed(rng, n);
    const Polynomial p = perm_poly(matrix_from_graph(g));
    for (std::size_t i = 0; i <= n; ++i) {
      ASSERT_EQ(Rational(sachs_coefficient(g, i)), p.b(i)) << "n=" << n << " i=" << i;
    }
  }
}

TEST(EkOk, Examples) {
  const EkOkResult neg = ek_ok(from(kNegTriangle), 3);
  EXPECT_EQ(neg.even, 0);
  EXPECT_EQ(neg.odd, -2);
  EXPECT_EQ(neg.s, 2);

  const EkOkResult pos = ek_ok(from(kTriangle), 3);
  EXPECT_EQ(pos.even, -2);
  EXPECT_EQ(pos.odd, 0);
  EXPECT_EQ(pos.s, -2);

  const EkOkResult zero = ek_ok(from(kTriangle), 0);
  EXPECT_EQ(zero.even, 1);
  EXPECT_EQ(zero.odd, 0);
  EXPECT_EQ(zero.s, 1);
}

TEST(EkOk, MatrixBAtOrderThree) {
  // Triangles {1,2,3} (positive) and {0,2,3} (negative) are the only
  // order-3 Sachs subgraphs.
  const EkOkResult r = ek_ok(from(oracle::matrix_B()), 3);
  EXPECT_EQ(r.even, -2);
  EXPECT_EQ(r.odd, -2);
  EXPECT_EQ(r.s, 0);
}

TEST(EkOk, BalancedHasNoOddPart) {
  SplitMix64 rng(73);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(8);
    SignedGraph base(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng.chance(1, 2)) base.add_edge(u, v, 1);
    std::vector<int> d(n);
    for (auto& x : d) x = rng.sign();
    const SignedGraph g = switch_signs(base, SwitchingVector(d));
    for (std::size_t i = 0; i <= n; ++i) {
      const EkOkResult r = ek_ok(g, i);
      ASSERT_EQ(r.odd, 0);
      ASSERT_EQ(r.s, r.even - r.odd);
    }
  }
}

TEST(EkOk, NonnegativeGraphHasSachsSubgraphAtPermanentalRank) {
  SplitMix64 rng(74);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(8);
    SignedGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng.chance(1, 3)) g.add_edge(u, v, 1);
    const std::size_t k = perm_rank_exact(matrix_from_graph(g)).rank;
    ASSERT_GT(count_sachs(g, k), 0u);
  }
}

TEST(CriterionReport, Examples) {
  const CriterionReport b = criterion_report(from(oracle::matrix_B()));
  EXPECT_EQ(b.k, 3u);
  EXPECT_EQ(b.split.even, b.split.odd);
  EXPECT_FALSE(b.criterion_predicts_identity);
  EXPECT_FALSE(b.identity_holds);
  EXPECT_EQ(b.k + b.nullity, 5u);

  const CriterionReport neg = criterion_report(from(kNegTriangle));
  EXPECT_EQ(neg.k, 3u);
  EXPECT_TRUE(neg.criterion_predicts_identity);
  EXPECT_TRUE(neg.identity_holds);

  const CriterionReport bal = criterion_report(from(kBalancedTriangle));
  EXPECT_TRUE(bal.identity_holds);
  EXPECT_TRUE(bal.criterion_predicts_identity);
}

TEST(CriterionReport, AgreesWithDirectComputation) {
  SplitMix64 rng(75);
  std::size_t failures = 0;
  for (int t = 0; t < 400; ++t) {
    const SignedGraph g = random_signed(rng, 1 + rng.below(7));
    const CriterionReport r = criterion_report(g);
    ASSERT_EQ(r.criterion_predicts_identity, r.identity_holds);
    failures += !r.identity_holds;
  }
  EXPECT_GT(failures, 0u);
}

}  // namespace
}  // namespace permrank
