#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permrank/errors.hpp"
#include "permrank/verify.hpp"

namespace permrank {
namespace {

const TheoremCheck& theorem(const VerifyReport& r, const std::string& name) {
  for (const auto& t : r.theorems)
    if (t.name == name) return t;
  throw std::logic_error("missing theorem " + name);
}

TEST(Verify, MatrixB) {
  const VerifyReport r = verify(oracle::matrix_B());
  EXPECT_EQ(r.n, 4u);
  EXPECT_EQ(r.rho, 3u);
  EXPECT_EQ(r.eta, 2u);
  EXPECT_EQ(r.sum, 5u);
  EXPECT_EQ(r.classical_rank, 4u);
  EXPECT_FALSE(r.identity_holds);
  EXPECT_TRUE(r.inequality_holds);
  EXPECT_TRUE(r.yu_bound_holds);
  ASSERT_TRUE(r.ek_ok.has_value());
  EXPECT_EQ(r.ek_ok->even, r.ek_ok->odd);
  EXPECT_TRUE(r.classes.zero_pm1);
  EXPECT_EQ(r.classes.balanced, false);
  EXPECT_EQ(r.classes.parity, CycleParity::Mixed);
  EXPECT_EQ(r.poly.to_string(), "x^4 + 5x^2");
  EXPECT_EQ(r.witness.rows.size(), 3u);
  EXPECT_NE(r.witness.permanent, 0);
  EXPECT_TRUE(r.violations().empty());
  EXPECT_TRUE(theorem(r, "ek_ok_criterion").applicable);
  EXPECT_FALSE(theorem(r, "uniform_parity").applicable);
}

TEST(Verify, ExampleGen) {
  const VerifyReport r = verify(builtin_example("example_gen"));
  EXPECT_EQ(r.rho, 1u);
  EXPECT_EQ(r.eta, 2u);
  EXPECT_EQ(r.sum, 3u);
  EXPECT_FALSE(r.classes.symmetric);
  EXPECT_TRUE(r.violations().empty());
  EXPECT_TRUE(theorem(r, "matching_rank_nonnegative").applicable);
  EXPECT_FALSE(theorem(r, "nonnegative_symmetric").applicable);
}

TEST(Verify, PsdInput) {
  // G G^T with G = [[1, 1], [1, -1], [0, 1]].
  const Matrix g = Matrix::from_rows({{1, 1}, {1, -1}, {0, 1}});
  const VerifyReport r = verify(g * g.transpose());
  EXPECT_TRUE(r.classes.psd);
  ASSERT_TRUE(r.principal_rho.has_value());
  EXPECT_EQ(*r.principal_rho, r.rho);
  EXPECT_TRUE(r.identity_holds);
  EXPECT_TRUE(theorem(r, "positive_semidefinite").holds);
}

TEST(Verify, ErrorsAndCaps) {
  EXPECT_THROW(verify(Matrix(2, 3)), InputError);
  EXPECT_THROW(verify(Matrix::zero(kVerifyCap + 1, kVerifyCap + 1)), ResourceError);
  const VerifyReport zero = verify(Matrix::zero(3, 3));
  EXPECT_EQ(zero.rho, 0u);
  EXPECT_EQ(zero.eta, 3u);
  EXPECT_TRUE(zero.identity_holds);
}

TEST(Verify, JsonSchema) {
  const nlohmann::json j = to_json(verify(oracle::matrix_B()));
  for (const char* key : {"n", "rho", "eta", "sum", "rank", "classes", "identity", "inequality",
                          "yu_bound", "ek", "ok", "witness", "polynomial", "theorems"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["rho"], 3);
  EXPECT_EQ(j["eta"], 2);
  EXPECT_EQ(j["ek"], j["ok"]);
  EXPECT_EQ(j["polynomial"], nlohmann::json({"1", "0", "5", "0", "0"}));
  EXPECT_EQ(j["witness"]["rows"].size(), 3u);
  EXPECT_EQ(j["classes"]["uniform_parity_class"], "mixed");
}

TEST(Verify, TextMentionsKeyValues) {
  const std::string t = to_text(verify(oracle::matrix_B()));
  EXPECT_NE(t.find("rho_per      3"), std::string::npos);
  EXPECT_NE(t.find("eta_per      2"), std::string::npos);
  EXPECT_NE(t.find("(> n)"), std::string::npos);
}

TEST(Batch, ThreadCountDoesNotChangeTallies) {
  BatchOptions opt;
  opt.cfg.kind = GenKind::Pm1Symmetric;
  opt.cfg.n = 6;
  opt.cfg.seed = 11;
  opt.n_min = 2;
  opt.count = 60;
  opt.vary_density = true;
  const nlohmann::json one = to_json(batch_verify(opt));
  opt.threads = 3;
  const nlohmann::json three = to_json(batch_verify(opt));
  EXPECT_EQ(one, three);
  EXPECT_EQ(one["violations"].size(), 0u);
}

TEST(Batch, ObserverSeesInstancesInOrder) {
  BatchOptions opt;
  opt.cfg.kind = GenKind::NonnegSymmetric;
  opt.cfg.n = 5;
  opt.cfg.seed = 3;
  opt.count = 20;
  opt.threads = 2;
  std::uint64_t expected = 0;
  const BatchSummary s = batch_verify(opt, [&](const Instance& inst, const VerifyReport& r) {
    EXPECT_EQ(inst.index, expected++);
    EXPECT_EQ(generate(inst.cfg), inst.matrix);
    EXPECT_TRUE(r.identity_holds);
  });
  EXPECT_EQ(expected, 20u);
  EXPECT_EQ(s.identity_holds, 20u);
}

TEST(Batch, InstanceSizesRespectRange) {
  BatchOptions opt;
  opt.cfg.kind = GenKind::UnbalancedSigned;
  opt.cfg.n = 6;
  opt.n_min = 1;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const GenConfig c = instance_config(opt, i);
    ASSERT_GE(c.n, 3u);
    ASSERT_LE(c.n, 6u);
  }
}

TEST(Search, FindsReproducibleIdentityFailures) {
  BatchOptions opt;
  opt.cfg.kind = GenKind::Pm1Symmetric;
  opt.cfg.n = 6;
  opt.cfg.seed = 2024;
  opt.n_min = 4;
  opt.count = 200;
  opt.vary_density = true;
  const auto hits = search_counterexample(opt);
  ASSERT_FALSE(hits.empty());
  for (const auto& h : hits) {
    EXPECT_FALSE(h.report.identity_holds);
    EXPECT_GT(h.report.sum, h.report.n);
    EXPECT_EQ(generate(h.instance.cfg), h.instance.matrix);
    EXPECT_EQ(h.report.ek_ok->even, h.report.ek_ok->odd);
  }
}

}  // namespace
}  // namespace permrank
