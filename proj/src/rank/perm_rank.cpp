#include "permrank/perm_rank.hpp"

#include <algorithm>
#include <functional>

#include "permrank/errors.hpp"
#include "permrank/permanent.hpp"

namespace permrank {
namespace {

// Kuhn's augmenting paths on a 0/1 pattern; sizes here are at most 30 or so.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left, std::size_t right)
      : adj_(left), match_right_(right, kNone), seen_(right, 0) {}

  void add_edge(std::size_t u, std::size_t v) { adj_[u].push_back(v); }

  std::size_t solve() {
    std::size_t size = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      ++stamp_;
      if (augment(u)) ++size;
    }
    return size;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      if (seen_[v] == stamp_) continue;
      seen_[v] = stamp_;
      if (match_right_[v] == kNone || augment(match_right_[v])) {
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_right_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
};

std::size_t matching_on(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  BipartiteMatcher m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (sgn(a(rows[r], cols[c])) != 0) m.add_edge(r, c);
  return m.solve();
}

// Calls visit on each k-subset of {0..n-1} in lexicographic order until it
// returns true.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const IndexSet&)>& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(IndexSet(idx))) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + (pos - 1)) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

SupportDigraph support_digraph(const Matrix& a) {
  if (!a.is_square()) throw InputError("support digraph needs a square matrix");
  SupportDigraph g;
  g.n = a.rows();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) g.arcs.emplace_back(i, j);
  return g;
}

std::size_t support_matching_bound(const Matrix& a) {
  return matching_on(a, IndexSet::range(a.rows()), IndexSet::range(a.cols()));
}

PermRankResult perm_rank_exact(const Matrix& a, bool principal_only) {
  if (principal_only && !a.is_square()) {
    throw InputError("principal-only permanental rank needs a square matrix");
  }
  const std::size_t bound = support_matching_bound(a);

  PermRankResult result;
  for (std::size_t k = bound; k >= 1; --k) {
    auto try_pair = [&](const IndexSet& rows, const IndexSet& cols) {
      if (matching_on(a, rows, cols) < k) return false;
      Rational p = permanent_sub(a, rows, cols);
      if (sgn(p) == 0) return false;
      result = {k, rows, cols, std::move(p)};
      return true;
    };

    bool found = false;
    if (principal_only) {
      found = for_each_subset(a.rows(), k, [&](const IndexSet& s) { return try_pair(s, s); });
    } else {
      const IndexSet all_cols = IndexSet::range(a.cols());
      found = for_each_subset(a.rows(), k, [&](const IndexSet& rows) {
        if (matching_on(a, rows, all_cols) < k) return false;
        return for_each_subset(a.cols(), k,
                               [&](const IndexSet& cols) { return try_pair(rows, cols); });
      });
    }
    if (found) return result;
  }
  return result;
}

std::size_t perm_rank_nonnegative(const Matrix& a) {
  if (!a.is_nonnegative()) throw InputError("perm_rank_nonnegative needs a nonnegative matrix");
  return support_matching_bound(a);
}

}  // namespace permrank
