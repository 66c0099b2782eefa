#include "permrank/kernels/ryser_mod.hpp"

#include <bit>

#include "permrank/errors.hpp"

namespace permrank::kernels {
namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Deterministic for all 32-bit n with bases 2, 7, 61.
bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(PERMRANK_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa resolve_isa(IsaRequest request) {
  switch (request) {
    case IsaRequest::Scalar:
      return Isa::Scalar;
    case IsaRequest::Avx2:
      if (!avx2_available()) throw InputError("AVX2 kernel requested but not available");
      return Isa::Avx2;
    case IsaRequest::Auto:
      break;
  }
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

Residues ryser_partial(Isa isa, const ModularMatrix& m, std::uint64_t first, std::uint64_t last) {
#if defined(PERMRANK_HAVE_AVX2)
  if (isa == Isa::Avx2) return ryser_partial_avx2(m, first, last);
#else
  (void)isa;
#endif
  return ryser_partial_scalar(m, first, last);
}

Residues ryser_partial_scalar(const ModularMatrix& m, std::uint64_t first, std::uint64_t last) {
  const std::size_t n = m.n;
  Residues out{};
  if (first >= last) return out;

  for (std::size_t lane = 0; lane < kLanes; ++lane) {
    const std::uint64_t p = m.primes[lane];
    std::vector<std::uint64_t> row_sum(n, 0);

    const std::uint64_t start = first ^ (first >> 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (!((start >> j) & 1)) continue;
      for (std::size_t i = 0; i < n; ++i) row_sum[i] = (row_sum[i] + m.at(i, j, lane)) % p;
    }

    std::uint64_t even = 0;
    std::uint64_t odd = 0;
    for (std::uint64_t k = first; k < last; ++k) {
      if (k != first) {
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        const bool added = ((k ^ (k >> 1)) >> j) & 1;
        for (std::size_t i = 0; i < n; ++i) {
          const std::uint64_t a = m.at(i, j, lane);
          row_sum[i] = added ? (row_sum[i] + a) % p : (row_sum[i] + p - a) % p;
        }
      }
      std::uint64_t prod = 1;
      for (std::size_t i = 0; i < n; ++i) prod = prod * row_sum[i] % p;
      // |S_k| has the parity of k.
      if (k & 1) {
        odd = (odd + prod) % p;
      } else {
        even = (even + prod) % p;
      }
    }
    out[lane] = static_cast<std::uint32_t>((even + p - odd) % p);
  }
  return out;
}

const std::vector<std::uint32_t>& kernel_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    // 256 primes of 31 bits cover about 7900 bits, far beyond a 30 x 30
    // permanent with entries of a few hundred bits.
    std::vector<std::uint32_t> v;
    for (std::uint32_t c = 0x7fffffffu; v.size() < 256; c -= 2) {
      if (is_prime_u32(c)) v.push_back(c);
    }
    return v;
  }();
  return primes;
}

}  // namespace permrank::kernels
