#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "permrank/signed_graph.hpp"

namespace permrank {

struct SachsComponent {
  enum class Kind { Edge, Cycle };
  Kind kind = Kind::Edge;
  /// Edge: {u, v} with u < v. Cycle: closed vertex sequence, length >= 3.
  std::vector<std::size_t> vertices;
  /// Product of edge signs (cycles); the edge sign for edges.
  int sign = 1;
};

/// Vertex-disjoint union of edges and cycles of a host graph.
class SachsSubgraph {
 public:
  const std::vector<SachsComponent>& components() const { return components_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t cycle_count() const { return cycles_; }
  std::size_t negative_cycle_count() const { return negative_cycles_; }

  void push(SachsComponent c);
  void pop();

 private:
  std::vector<SachsComponent> components_;
  std::size_t vertex_count_ = 0;
  std::size_t cycles_ = 0;
  std::size_t negative_cycles_ = 0;
};

/// Streams every Sachs subgraph on exactly `order` vertices once. The
/// reference passed to `visit` is only valid during the call.
/// Throws InputError when order > n.
void enumerate_sachs(const SignedGraph& g, std::size_t order,
                     const std::function<void(const SachsSubgraph&)>& visit);

/// s_i = (-1)^i sum_U (-1)^{c-(U)} 2^{c(U)}; s_0 = 1.
Integer sachs_coefficient(const SignedGraph& g, std::size_t order);

/// Split of s_k by parity of the negative-cycle count. Both parts keep the
/// (-1)^k prefactor, so s = even - odd.
struct EkOkResult {
  std::size_t k = 0;
  Integer even = 0;
  Integer odd = 0;
  Integer s = 0;
};

EkOkResult ek_ok(const SignedGraph& g, std::size_t k);

struct CriterionReport {
  std::size_t k = 0;  // permanental rank of the signed adjacency
  std::size_t nullity = 0;
  EkOkResult split;
  /// Prediction from the criterion: E_k != O_k.
  bool criterion_predicts_identity = false;
  /// Directly computed rank + nullity == n.
  bool identity_holds = false;
};

CriterionReport criterion_report(const SignedGraph& g);

}  // namespace permrank
