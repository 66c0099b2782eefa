#pragma once

// Multi-modular Ryser inner loop.
//
// The permanent of an integer matrix is recovered by CRT from its residues
// modulo several primes just below 2^31. One kernel call handles kLanes
// primes at once: each 64-bit SIMD lane carries one prime's arithmetic.
// The scalar reference and the AVX2 variant must agree bit for bit.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace permrank::kernels {

inline constexpr std::size_t kLanes = 4;
inline constexpr std::size_t kMaxDim = 30;

using Residues = std::array<std::uint32_t, kLanes>;

enum class Isa { Scalar, Avx2 };
enum class IsaRequest { Auto, Scalar, Avx2 };

const char* isa_name(Isa isa);

/// The AVX2 variant was compiled in and the running CPU supports it.
bool avx2_available();

/// Auto picks the widest available variant. Throws InputError when an
/// explicit request cannot be honored.
Isa resolve_isa(IsaRequest request);

/// n x n integer matrix reduced modulo kLanes primes.
struct ModularMatrix {
  std::size_t n = 0;
  Residues primes{};
  /// Column-major, lane-innermost: residues[(j * n + i) * kLanes + lane].
  std::vector<std::uint32_t> residues;

  std::uint32_t at(std::size_t i, std::size_t j, std::size_t lane) const {
    return residues[(j * n + i) * kLanes + lane];
  }
};

/// For every Gray-code step k in [first, last), with column set
/// S_k = k ^ (k >> 1), sums (-1)^|S_k| * prod_i (sum_{j in S_k} a(i, j))
/// modulo each lane's prime. Summing over [0, 2^n) and multiplying by
/// (-1)^n gives the permanent modulo each prime.
Residues ryser_partial_scalar(const ModularMatrix& m, std::uint64_t first, std::uint64_t last);
Residues ryser_partial_avx2(const ModularMatrix& m, std::uint64_t first, std::uint64_t last);

Residues ryser_partial(Isa isa, const ModularMatrix& m, std::uint64_t first, std::uint64_t last);

/// Primes below 2^31 in decreasing order, enough for any permanent the
/// library accepts. Computed once.
const std::vector<std::uint32_t>& kernel_primes();

}  // namespace permrank::kernels
