#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "permrank/matrix.hpp"

namespace permrank {

struct PermRankResult {
  std::size_t rank = 0;
  IndexSet rows;
  IndexSet cols;
  /// Permanent of A[rows, cols]; nonzero whenever rank > 0 (1 for rank 0).
  Rational permanent = 1;
};

/// Arc i -> j exactly when A(i, j) != 0.
struct SupportDigraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

/// Throws InputError for non-square input.
SupportDigraph support_digraph(const Matrix& a);

/// Size of a maximum matching between rows and columns joined where
/// A(i, j) != 0. Upper bound on the permanental rank of any matrix, and
/// equal to it for nonnegative ones. Rectangular input is fine.
std::size_t support_matching_bound(const Matrix& a);

/// Exact permanental rank with the lexicographically first witness found
/// by searching downward from the matching bound. With principal_only set,
/// only principal submatrices are tried (exact for PSD input).
PermRankResult perm_rank_exact(const Matrix& a, bool principal_only = false);

/// The matching bound, for entrywise nonnegative input. Throws InputError
/// on a negative entry.
std::size_t perm_rank_nonnegative(const Matrix& a);

}  // namespace permrank
