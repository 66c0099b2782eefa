// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>
#include <vector>

#include "permrank/kernels/ryser_mod.hpp"

namespace permrank::kernels {
namespace {

// Each 64-bit lane holds a residue < p < 2^31.

inline __m256i add_mod(__m256i a, __m256i b, __m256i p) {
  const __m256i s = _mm256_add_epi64(a, b);
  const __m256i below = _mm256_cmpgt_epi64(p, s);
  return _mm256_sub_epi64(s, _mm256_andnot_si256(below, p));
}

// Montgomery product a * b * 2^-32 mod p, result in [0, p).
// a * b < 2^62 and m * p < 2^63, so the sum fits in 64 bits.
inline __m256i mont_mul(__m256i a, __m256i b, __m256i p, __m256i neg_pinv) {
  const __m256i x = _mm256_mul_epu32(a, b);
  const __m256i m = _mm256_mul_epu32(x, neg_pinv);
  const __m256i u = _mm256_add_epi64(x, _mm256_mul_epu32(m, p));
  const __m256i r = _mm256_srli_epi64(u, 32);
  const __m256i below = _mm256_cmpgt_epi64(p, r);
  return _mm256_sub_epi64(r, _mm256_andnot_si256(below, p));
}

struct alignas(32) Lane4 {
  std::uint64_t v[kLanes];
};

inline __m256i load(const Lane4& x) { return _mm256_load_si256(reinterpret_cast<const __m256i*>(x.v)); }

std::uint32_t neg_inverse_mod_2_32(std::uint32_t p) {
  std::uint32_t inv = p;  // correct to 3 bits for odd p
  for (int k = 0; k < 5; ++k) inv *= 2u - p * inv;
  return 0u - inv;
}

}  // namespace

Residues ryser_partial_avx2(const ModularMatrix& m, std::uint64_t first, std::uint64_t last) {
  const std::size_t n = m.n;
  Residues out{};
  if (first >= last) return out;
  if (n == 0) return ryser_partial_scalar(m, first, last);

  alignas(32) std::uint64_t lanes[kLanes];
  for (std::size_t l = 0; l < kLanes; ++l) lanes[l] = m.primes[l];
  const __m256i p = _mm256_load_si256(reinterpret_cast<const __m256i*>(lanes));
  for (std::size_t l = 0; l < kLanes; ++l) lanes[l] = neg_inverse_mod_2_32(m.primes[l]);
  const __m256i neg_pinv = _mm256_load_si256(reinterpret_cast<const __m256i*>(lanes));

  // Widened column tables: plus[j * n + i] = a(i, j), minus = p - a(i, j).
  std::vector<Lane4> plus(n * n);
  std::vector<Lane4> minus(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < kLanes; ++l) {
        const std::uint64_t a = m.at(i, j, l);
        plus[j * n + i].v[l] = a;
        minus[j * n + i].v[l] = a == 0 ? 0 : m.primes[l] - a;
      }
    }
  }

  __m256i row_sum[kMaxDim];
  for (std::size_t i = 0; i < n; ++i) row_sum[i] = _mm256_setzero_si256();
  const std::uint64_t start = first ^ (first >> 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (!((start >> j) & 1)) continue;
    for (std::size_t i = 0; i < n; ++i) row_sum[i] = add_mod(row_sum[i], load(plus[j * n + i]), p);
  }

  __m256i even = _mm256_setzero_si256();
  __m256i odd = _mm256_setzero_si256();
  for (std::uint64_t k = first; k < last; ++k) {
    if (k != first) {
      const auto j = static_cast<std::size_t>(std::countr_zero(k));
      const bool added = ((k ^ (k >> 1)) >> j) & 1;
      const Lane4* col = (added ? plus.data() : minus.data()) + j * n;
      for (std::size_t i = 0; i < n; ++i) row_sum[i] = add_mod(row_sum[i], load(col[i]), p);
    }
    __m256i prod = row_sum[0];
    for (std::size_t i = 1; i < n; ++i) prod = mont_mul(prod, row_sum[i], p, neg_pinv);
    if (k & 1) {
      odd = add_mod(odd, prod, p);
    } else {
      even = add_mod(even, prod, p);
    }
  }

  alignas(32) std::uint64_t e[kLanes];
  alignas(32) std::uint64_t o[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(e), even);
  _mm256_store_si256(reinterpret_cast<__m256i*>(o), odd);
  for (std::size_t l = 0; l < kLanes; ++l) {
    const std::uint64_t q = m.primes[l];
    // Every product carried n - 1 Montgomery factors of 2^-32; undo them.
    const std::uint64_t r = (std::uint64_t{1} << 32) % q;
    std::uint64_t fix = 1;
    for (std::size_t i = 1; i < n; ++i) fix = fix * r % q;
    const std::uint64_t diff = (e[l] + q - o[l]) % q;
    out[l] = static_cast<std::uint32_t>(diff * fix % q);
  }
  return out;
}

}  // namespace permrank::kernels
