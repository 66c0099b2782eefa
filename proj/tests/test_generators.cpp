#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "permrank/errors.hpp"
#include "permrank/generators.hpp"
#include "permrank/signed_graph.hpp"

namespace permrank {
namespace {

GenConfig make(GenKind kind, std::size_t n, std::uint64_t seed) {
  GenConfig cfg;
  cfg.kind = kind;
  cfg.n = n;
  cfg.seed = seed;
  return cfg;
}

TEST(SplitMix64, ReferenceSequence) {
  // First outputs for seed 0 from the reference implementation.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, RangesStayInBounds) {
  SplitMix64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    ASSERT_LT(rng.below(7), 7u);
    const auto x = rng.between(-2, 2);
    ASSERT_GE(x, -2);
    ASSERT_LE(x, 2);
    const int s = rng.sign();
    ASSERT_TRUE(s == 1 || s == -1);
  }
  EXPECT_FALSE(rng.chance(0, 5));
  EXPECT_TRUE(rng.chance(5, 5));
}

TEST(GenKind, NamesRoundTrip) {
  for (GenKind k : {GenKind::Pm1Symmetric, GenKind::NonnegSymmetric, GenKind::GramPsd,
                    GenKind::BalancedSigned, GenKind::UnbalancedSigned, GenKind::UniformOddParity}) {
    EXPECT_EQ(parse_gen_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_gen_kind("nope"), InputError);
  EXPECT_TRUE(is_graph_kind(GenKind::BalancedSigned));
  EXPECT_FALSE(is_graph_kind(GenKind::GramPsd));
}

TEST(Generate, Deterministic) {
  for (GenKind k : {GenKind::Pm1Symmetric, GenKind::NonnegSymmetric, GenKind::GramPsd,
                    GenKind::BalancedSigned, GenKind::UnbalancedSigned, GenKind::UniformOddParity}) {
    const GenConfig cfg = make(k, 7, 1234);
    EXPECT_EQ(generate(cfg), generate(cfg)) << to_string(k);
  }
  EXPECT_NE(generate(make(GenKind::Pm1Symmetric, 8, 1)), generate(make(GenKind::Pm1Symmetric, 8, 2)));
}

TEST(Generate, ClassPredicatesHold) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 3 + seed % 6;

    const Matrix pm1 = generate(make(GenKind::Pm1Symmetric, n, seed));
    ASSERT_TRUE(pm1.is_symmetric() && pm1.has_zero_diagonal() && pm1.entries_in_zero_pm1());

    GenConfig nn = make(GenKind::NonnegSymmetric, n, seed);
    nn.extra = 4;
    const Matrix nonneg = generate(nn);
    ASSERT_TRUE(nonneg.is_symmetric() && nonneg.is_nonnegative() && nonneg.is_integral());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ASSERT_LE(nonneg(i, j), 4);

    const Matrix gram = generate(make(GenKind::GramPsd, n, seed));
    ASSERT_TRUE(gram.is_symmetric());
    ASSERT_TRUE(oracle::psd_by_minors(gram));

    const SignedGraph bal = graph_from_matrix(generate(make(GenKind::BalancedSigned, n, seed)));
    ASSERT_TRUE(is_balanced(bal).balanced);

    const SignedGraph unb = graph_from_matrix(generate(make(GenKind::UnbalancedSigned, n, seed)));
    ASSERT_FALSE(is_balanced(unb).balanced);

    const SignedGraph odd = graph_from_matrix(generate(make(GenKind::UniformOddParity, n, seed)));
    ASSERT_EQ(cycle_parity_class(odd), CycleParity::AllNegative);
  }
}

TEST(Generate, GramRankIsAtMostInnerDimension) {
  for (std::int64_t r = 0; r <= 3; ++r) {
    GenConfig cfg = make(GenKind::GramPsd, 6, 40 + r);
    cfg.extra = r;
    const Matrix a = generate(cfg);
    EXPECT_LE(oracle::gauss_rank(a), static_cast<std::size_t>(r));
    if (r == 0) EXPECT_TRUE(a.is_zero());
  }
}

TEST(Generate, DensityExtremes) {
  GenConfig empty = make(GenKind::Pm1Symmetric, 6, 3);
  empty.density = 0;
  EXPECT_TRUE(generate(empty).is_zero());
  GenConfig full = empty;
  full.density = 1;
  EXPECT_EQ(graph_from_matrix(generate(full)).edge_count(), 15u);
}

TEST(Generate, IdentitySwitchingGivesAllPositive) {
  GenConfig cfg = make(GenKind::BalancedSigned, 8, 77);
  cfg.identity_switching = true;
  const Matrix a = generate(cfg);
  EXPECT_TRUE(a.is_nonnegative());
  cfg.identity_switching = false;
  EXPECT_EQ(generate(cfg).abs(), a);
}

TEST(Generate, GraphKindsOnly) {
  EXPECT_EQ(matrix_from_graph(generate_graph(make(GenKind::BalancedSigned, 5, 1))),
            generate(make(GenKind::BalancedSigned, 5, 1)));
  EXPECT_THROW(generate_graph(make(GenKind::GramPsd, 5, 1)), InputError);
}

TEST(Validate, RejectsBadConfigs) {
  EXPECT_THROW(generate(make(GenKind::Pm1Symmetric, 0, 1)), InputError);
  EXPECT_THROW(generate(make(GenKind::UnbalancedSigned, 2, 1)), InputError);
  EXPECT_THROW(generate(make(GenKind::UniformOddParity, 2, 1)), InputError);
  GenConfig d = make(GenKind::Pm1Symmetric, 4, 1);
  d.density = Rational(3, 2);
  EXPECT_THROW(validate(d), InputError);
  GenConfig e = make(GenKind::GramPsd, 4, 1);
  e.extra = -1;
  EXPECT_THROW(validate(e), InputError);
}

TEST(BuiltinExamples, Values) {
  EXPECT_EQ(builtin_example("matrix_B"), oracle::matrix_B());
  const Matrix g = builtin_example("example_gen");
  EXPECT_EQ(g.rows(), 2u);
  EXPECT_THROW(builtin_example("nope"), InputError);
}

TEST(InstanceSeed, DistinctAcrossIndices) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(instance_seed(9, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(instance_seed(9, 0), instance_seed(10, 0));
}

}  // namespace
}  // namespace permrank
