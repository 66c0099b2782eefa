#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "permrank/matrix.hpp"
#include "permrank/signed_graph.hpp"

namespace permrank {

/// SplitMix64 (Steele, Lea, Flood).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den);
  int sign() { return (next() >> 63) ? -1 : 1; }

 private:
  std::uint64_t state_;
};

enum class GenKind {
  Pm1Symmetric,
  NonnegSymmetric,
  GramPsd,
  BalancedSigned,
  UnbalancedSigned,
  UniformOddParity,
};

std::string_view to_string(GenKind kind);
/// Accepts the snake_case names, e.g. "gram_psd". Throws InputError.
GenKind parse_gen_kind(std::string_view name);
bool is_graph_kind(GenKind kind);

struct GenConfig {
  GenKind kind = GenKind::Pm1Symmetric;
  std::size_t n = 4;
  /// Edge / entry density as a rational in [0, 1].
  Rational density = Rational(1, 2);
  /// gram_psd: inner dimension r of G in A = G G^T (nullopt draws r
  /// uniformly in [1, n]; entries of G lie in [-2, 2]).
  /// nonneg_symmetric: largest entry (nullopt means 3).
  std::optional<std::int64_t> extra;
  std::uint64_t seed = 0;
  /// balanced_signed only: skip the random switching (D = I).
  bool identity_switching = false;
};

/// Throws InputError for n == 0, density outside [0, 1], negative extra,
/// or n < 3 for the unbalanced and uniform-parity kinds.
void validate(const GenConfig& cfg);

/// Deterministic for a fixed config. Graph kinds return the signed adjacency.
Matrix generate(const GenConfig& cfg);

/// Graph kinds only (InputError otherwise).
SignedGraph generate_graph(const GenConfig& cfg);

/// "example_gen" (2 x 2) or "matrix_B" (4 x 4). Throws InputError.
Matrix builtin_example(std::string_view name);

/// Derives the seed of the index-th instance of a batch.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index);

}  // namespace permrank
