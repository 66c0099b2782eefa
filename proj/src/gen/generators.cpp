#include "permrank/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "permrank/errors.hpp"

namespace permrank {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool SplitMix64::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Pm1Symmetric:
      return "pm1_symmetric";
    case GenKind::NonnegSymmetric:
      return "nonneg_symmetric";
    case GenKind::GramPsd:
      return "gram_psd";
    case GenKind::BalancedSigned:
      return "balanced_signed";
    case GenKind::UnbalancedSigned:
      return "unbalanced_signed";
    case GenKind::UniformOddParity:
      return "uniform_odd_parity";
  }
  return "?";
}

GenKind parse_gen_kind(std::string_view name) {
  for (GenKind k : {GenKind::Pm1Symmetric, GenKind::NonnegSymmetric, GenKind::GramPsd,
                    GenKind::BalancedSigned, GenKind::UnbalancedSigned,
                    GenKind::UniformOddParity}) {
    if (to_string(k) == name) return k;
  }
  throw InputError("unknown generator kind '" + std::string(name) + "'");
}

bool is_graph_kind(GenKind kind) {
  return kind == GenKind::Pm1Symmetric || kind == GenKind::BalancedSigned ||
         kind == GenKind::UnbalancedSigned || kind == GenKind::UniformOddParity;
}

void validate(const GenConfig& cfg) {
  if (cfg.n == 0) throw InputError("generator size must be at least 1");
  if (cfg.n > 30) throw InputError("generator size must be at most 30");
  if (sgn(cfg.density) < 0 || cfg.density > 1) throw InputError("density must lie in [0, 1]");
  if (cfg.extra && *cfg.extra < 0) throw InputError("extra parameter must be nonnegative");
  if ((cfg.kind == GenKind::UnbalancedSigned || cfg.kind == GenKind::UniformOddParity) &&
      cfg.n < 3) {
    throw InputError(std::string(to_string(cfg.kind)) + " needs n >= 3");
  }
}

namespace {

struct Density {
  std::uint64_t num;
  std::uint64_t den;
};

Density as_fraction(const Rational& d) {
  if (!d.get_num().fits_ulong_p() || !d.get_den().fits_ulong_p()) {
    throw InputError("density numerator/denominator too large");
  }
  return {d.get_num().get_ui(), d.get_den().get_ui()};
}

SignedGraph random_graph(SplitMix64& rng, std::size_t n, Density d, bool random_signs) {
  SignedGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.chance(d.num, d.den)) g.add_edge(u, v, random_signs ? rng.sign() : 1);
  return g;
}

Matrix nonneg_symmetric(SplitMix64& rng, const GenConfig& cfg, Density d) {
  const std::int64_t top = cfg.extra.value_or(3);
  Matrix m(cfg.n, cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i)
    for (std::size_t j = i; j < cfg.n; ++j) {
      if (top == 0 || !rng.chance(d.num, d.den)) continue;
      const Rational x(rng.between(1, top));
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

Matrix gram_psd(SplitMix64& rng, const GenConfig& cfg, Density d) {
  const std::size_t r = cfg.extra ? static_cast<std::size_t>(*cfg.extra)
                                  : static_cast<std::size_t>(rng.between(1, cfg.n));
  Matrix g(cfg.n, r);
  for (std::size_t i = 0; i < cfg.n; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (rng.chance(d.num, d.den)) g(i, j) = rng.between(-2, 2);
  return g * g.transpose();
}

SignedGraph balanced(SplitMix64& rng, const GenConfig& cfg, Density d) {
  SignedGraph base = random_graph(rng, cfg.n, d, false);
  std::vector<int> diag(cfg.n, 1);
  if (!cfg.identity_switching) {
    for (auto& x : diag) x = rng.sign();
  }
  return switch_signs(base, SwitchingVector(std::move(diag)));
}

SignedGraph unbalanced(SplitMix64& rng, const GenConfig& cfg, Density d) {
  SignedGraph g = random_graph(rng, cfg.n, d, true);
  const BalanceCertificate cert = is_balanced(g);
  if (!cert.balanced) return g;

  // Flip a chord of the breadth-first forest if one exists.
  std::vector<SignedEdge> edges = g.edges();
  std::vector<std::size_t> component(cfg.n);
  std::iota(component.begin(), component.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return component[x] == x ? x : component[x] = find(component[x]);
  };
  std::optional<std::size_t> chord;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t a = find(edges[k].u);
    const std::size_t b = find(edges[k].v);
    if (a == b) {
      chord = k;
      break;
    }
    component[a] = b;
  }

  SignedGraph out(cfg.n);
  if (chord) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      out.add_edge(edges[k].u, edges[k].v, k == *chord ? -edges[k].sign : edges[k].sign);
    }
    return out;
  }
  // A forest: add a negative triangle on three random vertices.
  std::vector<std::size_t> pick(cfg.n);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  for (std::size_t k = 0; k < 3; ++k) {
    std::swap(pick[k], pick[k + rng.below(cfg.n - k)]);
  }
  std::sort(pick.begin(), pick.begin() + 3);
  for (const auto& e : edges) {
    const bool in_triangle = std::count(pick.begin(), pick.begin() + 3, e.u) &&
                             std::count(pick.begin(), pick.begin() + 3, e.v);
    if (!in_triangle) out.add_edge(e.u, e.v, e.sign);
  }
  out.add_edge(pick[0], pick[1], 1);
  out.add_edge(pick[1], pick[2], 1);
  out.add_edge(pick[0], pick[2], -1);
  return out;
}

// Cactus: blocks are single cycles or single edges, glued at cut vertices.
// Every cycle of a cactus is one of its blocks, and each cycle block gets an
// odd number of negative edges.
SignedGraph odd_parity_cactus(SplitMix64& rng, const GenConfig& cfg, Density d) {
  const std::size_t n = cfg.n;
  SignedGraph g(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t k = n; k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);

  auto add_cycle = [&](const std::vector<std::size_t>& cyc) {
    const std::size_t len = cyc.size();
    std::vector<int> signs(len, 1);
    // Odd number of negative edges: 1, 3, ... up to len.
    const std::size_t negatives = 2 * rng.below((len + 1) / 2) + 1;
    std::vector<std::size_t> slots(len);
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    for (std::size_t k = 0; k < negatives; ++k) {
      std::swap(slots[k], slots[k + rng.below(len - k)]);
      signs[slots[k]] = -1;
    }
    for (std::size_t k = 0; k < len; ++k) g.add_edge(cyc[k], cyc[(k + 1) % len], signs[k]);
  };

  // The first block is always a cycle so the graph is never acyclic.
  std::size_t placed = std::min<std::size_t>(n, 3 + rng.below(std::min<std::size_t>(n - 2, 4)));
  add_cycle(std::vector<std::size_t>(order.begin(), order.begin() + placed));

  while (placed < n) {
    const std::size_t anchor = order[rng.below(placed)];
    const std::size_t left = n - placed;
    if (left >= 2 && rng.chance(d.num, d.den)) {
      const std::size_t extra = 2 + rng.below(std::min<std::size_t>(left - 1, 3));
      std::vector<std::size_t> cyc{anchor};
      cyc.insert(cyc.end(), order.begin() + placed, order.begin() + placed + extra);
      placed += extra;
      add_cycle(cyc);
    } else {
      g.add_edge(anchor, order[placed], rng.sign());
      ++placed;
    }
  }
  return g;
}

}  // namespace

SignedGraph generate_graph(const GenConfig& cfg) {
  validate(cfg);
  SplitMix64 rng(cfg.seed);
  const Density d = as_fraction(cfg.density);
  switch (cfg.kind) {
    case GenKind::Pm1Symmetric:
      return random_graph(rng, cfg.n, d, true);
    case GenKind::BalancedSigned:
      return balanced(rng, cfg, d);
    case GenKind::UnbalancedSigned:
      return unbalanced(rng, cfg, d);
    case GenKind::UniformOddParity:
      return odd_parity_cactus(rng, cfg, d);
    default:
      throw InputError(std::string(to_string(cfg.kind)) + " is not a graph kind");
  }
}

Matrix generate(const GenConfig& cfg) {
  validate(cfg);
  if (is_graph_kind(cfg.kind)) return matrix_from_graph(generate_graph(cfg));
  SplitMix64 rng(cfg.seed);
  const Density d = as_fraction(cfg.density);
  return cfg.kind == GenKind::GramPsd ? gram_psd(rng, cfg, d) : nonneg_symmetric(rng, cfg, d);
}

Matrix builtin_example(std::string_view name) {
  if (name == "example_gen") return Matrix::from_rows({{0, 1}, {0, 0}});
  if (name == "matrix_B") {
    return Matrix::from_rows({{0, 0, 1, -1}, {0, 0, 1, 1}, {1, 1, 0, 1}, {-1, 1, 1, 0}});
  }
  throw InputError("unknown example '" + std::string(name) + "' (try example_gen or matrix_B)");
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 mix(base ^ (index * 0xd1b54a32d192ed03ULL));
  return mix.next();
}

}  // namespace permrank
