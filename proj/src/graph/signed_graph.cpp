#include "permrank/signed_graph.hpp"

#include <algorithm>
#include <deque>

#include "permrank/errors.hpp"

namespace permrank {

void SignedGraph::add_edge(std::size_t u, std::size_t v, int sign) {
  const std::size_t n = vertex_count();
  if (u >= n || v >= n) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("loops are not allowed");
  if (sign != 1 && sign != -1) throw InputError("edge sign must be +1 or -1");
  if (u > v) std::swap(u, v);
  if (adjacent(u, v)) throw InputError("duplicate edge");

  auto insert = [](std::vector<Neighbor>& list, Neighbor nb) {
    auto it = std::lower_bound(list.begin(), list.end(), nb.vertex,
                               [](const Neighbor& x, std::size_t w) { return x.vertex < w; });
    list.insert(it, nb);
  };
  insert(adjacency_[u], {v, sign});
  insert(adjacency_[v], {u, sign});
  const SignedEdge e{u, v, sign};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const SignedEdge& a, const SignedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  edges_.insert(it, e);
}

int SignedGraph::sign(std::size_t u, std::size_t v) const {
  if (u >= vertex_count()) return 0;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& x, std::size_t w) { return x.vertex < w; });
  return it != list.end() && it->vertex == v ? it->sign : 0;
}

SwitchingVector::SwitchingVector(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InputError("switching vector entries must be +1 or -1");
  }
}

SignedGraph graph_from_matrix(const Matrix& a) {
  if (!a.is_square()) throw InputError("signed adjacency must be square");
  if (!a.is_symmetric()) throw InputError("signed adjacency must be symmetric");
  if (!a.entries_in_zero_pm1()) throw InputError("signed adjacency entries must be in {0, 1, -1}");
  if (!a.has_zero_diagonal()) throw InputError("signed adjacency must have zero diagonal");
  SignedGraph g(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) g.add_edge(i, j, sgn(a(i, j)));
  return g;
}

Matrix matrix_from_graph(const SignedGraph& g) {
  Matrix m(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = e.sign;
    m(e.v, e.u) = e.sign;
  }
  return m;
}

Matrix underlying_unsigned(const SignedGraph& g) {
  Matrix m(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = 1;
    m(e.v, e.u) = 1;
  }
  return m;
}

BalanceCertificate is_balanced(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<int> label(n, 0);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);

  for (std::size_t root = 0; root < n; ++root) {
    if (label[root] != 0) continue;
    label[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& [v, s] : g.neighbors(u)) {
        if (label[v] == 0) {
          label[v] = s * label[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
          continue;
        }
        if (label[v] == s * label[u]) continue;

        // Contradiction: tree path u .. lca .. v closed by edge (v, u).
        std::vector<std::size_t> from_u{u};
        std::vector<std::size_t> from_v{v};
        std::size_t a = u;
        std::size_t b = v;
        while (depth[a] > depth[b]) from_u.push_back(a = parent[a]);
        while (depth[b] > depth[a]) from_v.push_back(b = parent[b]);
        while (a != b) {
          from_u.push_back(a = parent[a]);
          from_v.push_back(b = parent[b]);
        }
        from_v.pop_back();  // lca already ends from_u
        BalanceCertificate cert;
        cert.negative_cycle = std::move(from_u);
        cert.negative_cycle.insert(cert.negative_cycle.end(), from_v.rbegin(), from_v.rend());
        return cert;
      }
    }
  }
  BalanceCertificate cert;
  cert.balanced = true;
  cert.switching = SwitchingVector(std::move(label));
  return cert;
}

SignedGraph switch_signs(const SignedGraph& g, const SwitchingVector& d) {
  if (d.size() != g.vertex_count()) throw InputError("switching vector length mismatch");
  SignedGraph out(g.vertex_count());
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v, d[e.u] * e.sign * d[e.v]);
  return out;
}

Matrix diag_similar(const Matrix& a, const SwitchingVector& d) {
  if (!a.is_square() || d.size() != a.rows()) throw InputError("switching vector length mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (d[i] * d[j] < 0) m(i, j) = -m(i, j);
  return m;
}

int cycle_sign(const SignedGraph& g, std::span<const std::size_t> cycle) {
  int s = 1;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const int e = g.sign(cycle[k], cycle[(k + 1) % cycle.size()]);
    if (e == 0) throw InputError("cycle uses a non-edge");
    s *= e;
  }
  return s;
}

std::string_view to_string(CycleParity p) {
  switch (p) {
    case CycleParity::Acyclic:
      return "acyclic";
    case CycleParity::AllPositive:
      return "all-positive";
    case CycleParity::AllNegative:
      return "all-negative";
    case CycleParity::Mixed:
      return "mixed";
  }
  return "?";
}

namespace {

class CycleWalker {
 public:
  CycleWalker(const SignedGraph& g, const std::function<bool(std::span<const std::size_t>)>& visit,
              std::size_t cap)
      : g_(g), visit_(visit), cap_(cap), on_path_(g.vertex_count(), false) {}

  void run() {
    for (std::size_t s = 0; s < g_.vertex_count() && !stopped_; ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = true;
      extend(s);
      on_path_[s] = false;
    }
  }

 private:
  // Backtracking over paths from start_ through vertices larger than it.
  void extend(std::size_t u) {
    for (const auto& [v, s] : g_.neighbors(u)) {
      if (stopped_) return;
      if (v == start_) {
        if (path_.size() >= 3 && path_[1] < path_.back()) emit();
        continue;
      }
      if (v < start_ || on_path_[v]) continue;
      on_path_[v] = true;
      path_.push_back(v);
      extend(v);
      path_.pop_back();
      on_path_[v] = false;
    }
  }

  void emit() {
    if (++count_ > cap_) {
      throw ResourceError("cycle enumeration exceeded cap of " + std::to_string(cap_));
    }
    if (!visit_(path_)) stopped_ = true;
  }

  const SignedGraph& g_;
  const std::function<bool(std::span<const std::size_t>)>& visit_;
  std::size_t cap_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
  std::size_t count_ = 0;
  bool stopped_ = false;
};

}  // namespace

void enumerate_cycles(const SignedGraph& g,
                      const std::function<bool(std::span<const std::size_t>)>& visit,
                      std::size_t cap) {
  CycleWalker(g, visit, cap).run();
}

CycleParity cycle_parity_class(const SignedGraph& g, std::size_t cap) {
  bool positive = false;
  bool negative = false;
  enumerate_cycles(
      g,
      [&](std::span<const std::size_t> cycle) {
        (cycle_sign(g, cycle) > 0 ? positive : negative) = true;
        return !(positive && negative);
      },
      cap);
  if (positive && negative) return CycleParity::Mixed;
  if (positive) return CycleParity::AllPositive;
  if (negative) return CycleParity::AllNegative;
  return CycleParity::Acyclic;
}

}  // namespace permrank
