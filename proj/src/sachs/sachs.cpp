#include "permrank/sachs.hpp"

#include "permrank/errors.hpp"
#include "permrank/perm_rank.hpp"
#include "permrank/polynomial.hpp"

namespace permrank {

void SachsSubgraph::push(SachsComponent c) {
  vertex_count_ += c.vertices.size();
  if (c.kind == SachsComponent::Kind::Cycle) {
    ++cycles_;
    if (c.sign < 0) ++negative_cycles_;
  }
  components_.push_back(std::move(c));
}

void SachsSubgraph::pop() {
  const SachsComponent& c = components_.back();
  vertex_count_ -= c.vertices.size();
  if (c.kind == SachsComponent::Kind::Cycle) {
    --cycles_;
    if (c.sign < 0) --negative_cycles_;
  }
  components_.pop_back();
}

namespace {

// Decides vertices in increasing order. At the lowest undecided vertex v:
// leave it out, match it to a higher free neighbour, or close a cycle
// through free vertices starting at v.
class SachsWalker {
 public:
  SachsWalker(const SignedGraph& g, std::size_t order,
              const std::function<void(const SachsSubgraph&)>& visit)
      : g_(g), order_(order), visit_(visit), used_(g.vertex_count(), false) {}

  void run() { decide(0); }

 private:
  void decide(std::size_t v) {
    const std::size_t n = g_.vertex_count();
    const std::size_t have = current_.vertex_count();
    if (have == order_) {
      visit_(current_);
      return;
    }
    while (v < n && used_[v]) ++v;
    if (v == n) return;
    std::size_t free_from_v = 0;
    for (std::size_t w = v; w < n; ++w) free_from_v += used_[w] ? 0 : 1;
    if (have + free_from_v < order_) return;

    used_[v] = true;
    // Edge components.
    if (have + 2 <= order_) {
      for (const auto& [w, s] : g_.neighbors(v)) {
        if (w < v || used_[w]) continue;
        used_[w] = true;
        current_.push({SachsComponent::Kind::Edge, {v, w}, s});
        decide(v + 1);
        current_.pop();
        used_[w] = false;
      }
    }
    // Cycle components.
    if (have + 3 <= order_) {
      path_.assign(1, v);
      grow_cycle(v, v, 1);
    }
    used_[v] = false;

    decide(v + 1);  // v left out
  }

  void grow_cycle(std::size_t start, std::size_t u, int sign) {
    for (const auto& [w, s] : g_.neighbors(u)) {
      if (w == start) {
        if (path_.size() >= 3 && path_[1] < path_.back()) {
          std::vector<std::size_t> saved = path_;
          current_.push({SachsComponent::Kind::Cycle, path_, sign * s});
          decide(start + 1);
          current_.pop();
          path_ = std::move(saved);
        }
        continue;
      }
      if (w < start || used_[w]) continue;
      if (current_.vertex_count() + path_.size() + 1 > order_) continue;
      used_[w] = true;
      path_.push_back(w);
      grow_cycle(start, w, sign * s);
      path_.pop_back();
      used_[w] = false;
    }
  }

  const SignedGraph& g_;
  std::size_t order_;
  const std::function<void(const SachsSubgraph&)>& visit_;
  std::vector<bool> used_;
  std::vector<std::size_t> path_;
  SachsSubgraph current_;
};

}  // namespace

void enumerate_sachs(const SignedGraph& g, std::size_t order,
                     const std::function<void(const SachsSubgraph&)>& visit) {
  if (order > g.vertex_count()) {
    throw InputError("Sachs order " + std::to_string(order) + " exceeds vertex count " +
                     std::to_string(g.vertex_count()));
  }
  SachsWalker(g, order, visit).run();
}

EkOkResult ek_ok(const SignedGraph& g, std::size_t k) {
  EkOkResult r;
  r.k = k;
  enumerate_sachs(g, k, [&](const SachsSubgraph& u) {
    Integer weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), 2, u.cycle_count());
    (u.negative_cycle_count() % 2 == 0 ? r.even : r.odd) += weight;
  });
  if (k % 2 == 1) {
    r.even = -r.even;
    r.odd = -r.odd;
  }
  r.s = r.even - r.odd;
  return r;
}

Integer sachs_coefficient(const SignedGraph& g, std::size_t order) { return ek_ok(g, order).s; }

CriterionReport criterion_report(const SignedGraph& g) {
  const Matrix a = matrix_from_graph(g);
  CriterionReport r;
  r.k = perm_rank_exact(a).rank;
  r.nullity = perm_nullity(a);
  r.split = ek_ok(g, r.k);
  r.criterion_predicts_identity = r.split.even != r.split.odd;
  r.identity_holds = r.k + r.nullity == g.vertex_count();
  return r;
}

}  // namespace permrank
