#pragma once

#include <cstddef>

#include "permrank/kernels/ryser_mod.hpp"
#include "permrank/matrix.hpp"

namespace permrank {

inline constexpr std::size_t kNaivePermanentCap = 9;
inline constexpr std::size_t kMaxPermanentDim = kernels::kMaxDim;

struct PermanentOptions {
  /// Worker threads for the inclusion-exclusion loop; 0 means one.
  unsigned threads = 1;
  kernels::IsaRequest isa = kernels::IsaRequest::Auto;
};

/// Direct sum over all n! permutations. Oracle only: refuses n > cap with
/// ResourceError. The 0 x 0 permanent is 1.
Rational permanent_naive(const Matrix& a, std::size_t cap = kNaivePermanentCap);

/// Ryser inclusion-exclusion over Gray-code ordered column subsets,
/// evaluated modulo enough primes to pin the exact value, then lifted by
/// CRT. Rational input is handled by clearing row denominators.
/// Throws InputError for non-square input, ResourceError for n > 30.
Rational permanent(const Matrix& a, const PermanentOptions& options = {});

/// permanent(submatrix(a, rows, cols)); the empty permanent is 1.
Rational permanent_sub(const Matrix& a, const IndexSet& rows, const IndexSet& cols,
                       const PermanentOptions& options = {});

/// |per(A)| <= prod_i sum_j |a_ij| for the integer matrix `m`.
Integer permanent_bound(const IntegerRows& m);

}  // namespace permrank
