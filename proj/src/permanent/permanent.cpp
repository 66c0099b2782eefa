#include "permrank/permanent.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

#include "permrank/errors.hpp"

namespace permrank {
namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    throw InputError(std::string(what) + " needs a square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

kernels::ModularMatrix reduce(const IntegerRows& m, std::span<const std::uint32_t> primes) {
  kernels::ModularMatrix out;
  out.n = m.rows;
  std::copy(primes.begin(), primes.end(), out.primes.begin());
  out.residues.resize(m.rows * m.cols * kernels::kLanes);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t l = 0; l < kernels::kLanes; ++l) {
        out.residues[(j * m.rows + i) * kernels::kLanes + l] = static_cast<std::uint32_t>(
            mpz_fdiv_ui(m(i, j).get_mpz_t(), primes[l]));
      }
  return out;
}

kernels::Residues run_kernel(kernels::Isa isa, const kernels::ModularMatrix& mm, unsigned threads) {
  const std::uint64_t total = std::uint64_t{1} << mm.n;
  // Tiny problems are not worth a thread.
  if (threads <= 1 || mm.n < 12) return kernels::ryser_partial(isa, mm, 0, total);

  const std::uint64_t chunks = std::min<std::uint64_t>(threads, total);
  std::vector<kernels::Residues> partial(chunks);
  std::vector<std::thread> workers;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = total * c / chunks;
    const std::uint64_t hi = total * (c + 1) / chunks;
    workers.emplace_back([&, c, lo, hi] { partial[c] = kernels::ryser_partial(isa, mm, lo, hi); });
  }
  for (auto& w : workers) w.join();

  kernels::Residues sum{};
  for (std::size_t l = 0; l < kernels::kLanes; ++l) {
    std::uint64_t s = 0;
    for (const auto& r : partial) s = (s + r[l]) % mm.primes[l];
    sum[l] = static_cast<std::uint32_t>(s);
  }
  return sum;
}

}  // namespace

Integer permanent_bound(const IntegerRows& m) {
  Integer bound = 1;
  for (std::size_t i = 0; i < m.rows; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < m.cols; ++j) row += ::abs(m(i, j));
    bound *= row;
  }
  return bound;
}

Rational permanent_naive(const Matrix& a, std::size_t cap) {
  require_square(a, "permanent_naive");
  const std::size_t n = a.rows();
  if (n > cap) {
    throw ResourceError("permanent_naive refuses n = " + std::to_string(n) + " (cap " +
                        std::to_string(cap) + ")");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational sum = 0;
  Rational term;
  do {
    term = 1;
    for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) term *= a(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Rational permanent(const Matrix& a, const PermanentOptions& options) {
  require_square(a, "permanent");
  const std::size_t n = a.rows();
  if (n > kMaxPermanentDim) {
    throw ResourceError("permanent is capped at n = " + std::to_string(kMaxPermanentDim) +
                        ", got " + std::to_string(n));
  }
  if (n == 0) return 1;

  const IntegerRows m = clear_row_denominators(a);
  const Integer bound = permanent_bound(m);
  if (bound == 0) return 0;

  // Need the product of primes to exceed 2 * bound for a signed lift.
  const auto& primes = kernels::kernel_primes();
  const Integer needed = 2 * bound;
  Integer modulus = 1;
  std::size_t used = 0;
  while (modulus <= needed) {
    if (used == primes.size()) throw ResourceError("permanent entries too large for the kernel");
    modulus *= primes[used++];
  }
  used = (used + kernels::kLanes - 1) / kernels::kLanes * kernels::kLanes;
  if (used > primes.size()) throw ResourceError("permanent entries too large for the kernel");

  const kernels::Isa isa = kernels::resolve_isa(options.isa);
  const unsigned threads = std::max(1u, options.threads);

  // Incremental CRT (Garner style): value == residue mod lifted_modulus.
  Integer value = 0;
  Integer lifted_modulus = 1;
  Integer t;
  for (std::size_t g = 0; g < used; g += kernels::kLanes) {
    const std::span<const std::uint32_t> group(primes.data() + g, kernels::kLanes);
    const kernels::ModularMatrix mm = reduce(m, group);
    const kernels::Residues r = run_kernel(isa, mm, threads);
    for (std::size_t l = 0; l < kernels::kLanes; ++l) {
      const unsigned long p = group[l];
      const unsigned long current = mpz_fdiv_ui(value.get_mpz_t(), p);
      const unsigned long inv_base = [&] {
        Integer inv;
        Integer pz = p;
        mpz_invert(inv.get_mpz_t(), Integer(lifted_modulus % pz).get_mpz_t(), pz.get_mpz_t());
        return inv.get_ui();
      }();
      const unsigned long delta = (r[l] + p - current) % p;
      t = Integer(static_cast<unsigned long>(
          (static_cast<unsigned long long>(delta) * inv_base) % p));
      value += lifted_modulus * t;
      lifted_modulus *= p;
    }
  }
  if (value > lifted_modulus / 2) value -= lifted_modulus;
  if (n % 2 == 1) value = -value;

  Rational result(value, m.scale);
  result.canonicalize();
  return result;
}

Rational permanent_sub(const Matrix& a, const IndexSet& rows, const IndexSet& cols,
                       const PermanentOptions& options) {
  if (rows.size() != cols.size()) {
    throw InputError("permanent_sub needs |rows| == |cols|");
  }
  return permanent(submatrix(a, rows, cols), options);
}

}  // namespace permrank
