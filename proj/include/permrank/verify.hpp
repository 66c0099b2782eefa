#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permrank/generators.hpp"
#include "permrank/perm_rank.hpp"
#include "permrank/polynomial.hpp"
#include "permrank/sachs.hpp"
#include "permrank/signed_graph.hpp"

namespace permrank {

inline constexpr std::size_t kVerifyCap = 14;

struct ClassFlags {
  bool nonnegative = false;
  bool symmetric = false;
  bool psd = false;
  /// Symmetric, zero diagonal, entries in {0, +1, -1}: a signed adjacency.
  bool zero_pm1 = false;
  /// Only meaningful for zero_pm1 input.
  std::optional<bool> balanced;
  /// Only for zero_pm1 input, and only when enumeration stayed under the cap.
  std::optional<CycleParity> parity;
};

struct TheoremCheck {
  std::string name;
  bool applicable = false;
  bool holds = false;
};

struct VerifyReport {
  std::size_t n = 0;
  std::size_t rho = 0;
  std::size_t eta = 0;
  std::size_t sum = 0;
  std::size_t classical_rank = 0;
  ClassFlags classes;
  bool identity_holds = false;
  bool inequality_holds = false;
  bool yu_bound_holds = false;
  std::optional<EkOkResult> ek_ok;
  PermRankResult witness;
  Polynomial poly;
  /// Principal-only rank, computed for PSD input.
  std::optional<std::size_t> principal_rho;
  std::vector<TheoremCheck> theorems;

  /// Applicable theorems that failed. Any entry means a bug somewhere.
  std::vector<std::string> violations() const;
};

struct VerifyOptions {
  std::size_t cycle_cap = kDefaultCycleCap;
};

/// Computes rank, nullity, class flags and every applicable theorem.
/// Throws InputError for non-square input, ResourceError above kVerifyCap.
VerifyReport verify(const Matrix& a, const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

struct BatchOptions {
  GenConfig cfg;
  std::size_t count = 0;
  /// Instance sizes are drawn uniformly from [n_min, cfg.n]; 0 means cfg.n.
  std::size_t n_min = 0;
  /// Draw each instance's density from {2/10, ..., 10/10}.
  bool vary_density = false;
  unsigned threads = 1;
};

struct Instance {
  std::uint64_t index = 0;
  GenConfig cfg;  // exact config that regenerates the matrix
  Matrix matrix;
};

/// The config of the index-th instance of a batch.
GenConfig instance_config(const BatchOptions& options, std::uint64_t index);

struct TheoremTally {
  std::string name;
  std::size_t applicable = 0;
  std::size_t holds = 0;
};

struct Reproducer {
  Instance instance;
  VerifyReport report;
};

struct BatchSummary {
  std::size_t count = 0;
  std::size_t identity_holds = 0;
  std::size_t inequality_holds = 0;
  std::size_t yu_bound_holds = 0;
  std::size_t criterion_applicable = 0;
  /// Instances where identity_holds == (E_k != O_k).
  std::size_t criterion_agrees = 0;
  std::vector<TheoremTally> theorems;
  /// Lowest index first.
  std::vector<Reproducer> violations;
  /// Instances where the rank-nullity identity fails (lowest index first).
  std::vector<Reproducer> identity_failures;
};

using InstanceObserver = std::function<void(const Instance&, const VerifyReport&)>;

/// Verifies `count` seeded instances. Tallies do not depend on `threads`.
/// The observer, if any, is called in index order after all work is done.
BatchSummary batch_verify(const BatchOptions& options, const InstanceObserver& observer = {});

/// Instances where the identity fails, each re-verified from scratch.
std::vector<Reproducer> search_counterexample(const BatchOptions& options);

nlohmann::json to_json(const BatchSummary& summary);
nlohmann::json to_json(const Reproducer& r);
nlohmann::json to_json(const GenConfig& cfg);

}  // namespace permrank
