#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "permrank/matrix.hpp"

namespace permrank {

struct SignedEdge {
  std::size_t u = 0;  // u < v
  std::size_t v = 0;
  int sign = 1;       // +1 or -1

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Simple undirected graph with +/-1 edge signs.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(std::size_t n) : adjacency_(n) {}

  /// Throws InputError on loops, duplicates, bad signs or out-of-range ends.
  void add_edge(std::size_t u, std::size_t v, int sign);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// Sorted by (u, v).
  const std::vector<SignedEdge>& edges() const { return edges_; }
  /// 0 when u and v are not adjacent.
  int sign(std::size_t u, std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const { return sign(u, v) != 0; }

  struct Neighbor {
    std::size_t vertex;
    int sign;
  };
  /// Sorted by vertex.
  std::span<const Neighbor> neighbors(std::size_t u) const { return adjacency_[u]; }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<SignedEdge> edges_;
};

/// n values in {+1, -1}: the diagonal of D in D A D.
class SwitchingVector {
 public:
  SwitchingVector() = default;
  /// Throws InputError on any entry other than +/-1.
  explicit SwitchingVector(std::vector<int> signs);
  static SwitchingVector identity(std::size_t n) { return SwitchingVector(std::vector<int>(n, 1)); }

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<int>& values() const { return signs_; }

 private:
  std::vector<int> signs_;
};

struct BalanceCertificate {
  bool balanced = false;
  /// Set when balanced: D(u) D(v) = sign(u, v) on every edge.
  std::optional<SwitchingVector> switching;
  /// Set when unbalanced: closed walk v0 v1 ... v_{m-1} (v_{m-1} ~ v0)
  /// with an odd number of negative edges.
  std::vector<std::size_t> negative_cycle;
};

/// Signed adjacency matrix -> graph. Requires a square symmetric matrix
/// with entries in {0, +1, -1} and zero diagonal; throws InputError otherwise.
SignedGraph graph_from_matrix(const Matrix& a);

/// Graph -> signed adjacency matrix.
Matrix matrix_from_graph(const SignedGraph& g);

/// 0/1 adjacency of the same edge set.
Matrix underlying_unsigned(const SignedGraph& g);

/// Breadth-first label propagation; see BalanceCertificate.
BalanceCertificate is_balanced(const SignedGraph& g);

/// Edge signs become D(u) sign(u, v) D(v).
SignedGraph switch_signs(const SignedGraph& g, const SwitchingVector& d);

/// D A D entrywise. Throws InputError when sizes differ.
Matrix diag_similar(const Matrix& a, const SwitchingVector& d);

/// Product of the edge signs along the closed walk.
int cycle_sign(const SignedGraph& g, std::span<const std::size_t> cycle);

enum class CycleParity { Acyclic, AllPositive, AllNegative, Mixed };

std::string_view to_string(CycleParity p);

inline constexpr std::size_t kDefaultCycleCap = 2'000'000;

/// Visits each simple cycle (length >= 3) once, as a vertex sequence that
/// starts at its smallest vertex with cycle[1] < cycle.back(). The visitor
/// returns false to stop. Throws ResourceError once more than `cap` cycles
/// have been produced.
void enumerate_cycles(const SignedGraph& g,
                      const std::function<bool(std::span<const std::size_t>)>& visit,
                      std::size_t cap = kDefaultCycleCap);

/// Classifies by exhaustive cycle enumeration; stops early at Mixed.
CycleParity cycle_parity_class(const SignedGraph& g, std::size_t cap = kDefaultCycleCap);

}  // namespace permrank
