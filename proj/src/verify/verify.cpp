#include "permrank/verify.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "permrank/errors.hpp"
#include "permrank/permanent.hpp"

namespace permrank {

std::vector<std::string> VerifyReport::violations() const {
  std::vector<std::string> out;
  for (const auto& t : theorems)
    if (t.applicable && !t.holds) out.push_back(t.name);
  return out;
}

VerifyReport verify(const Matrix& a, const VerifyOptions& options) {
  if (!a.is_square()) throw InputError("verify needs a square matrix");
  if (a.rows() > kVerifyCap) {
    throw ResourceError("verify is capped at n = " + std::to_string(kVerifyCap));
  }

  VerifyReport r;
  r.n = a.rows();
  r.witness = perm_rank_exact(a);
  r.rho = r.witness.rank;
  r.poly = perm_poly(a);
  r.eta = r.poly.zero_root_multiplicity();
  r.sum = r.rho + r.eta;
  r.classical_rank = rank_exact(a);
  r.identity_holds = r.sum == r.n;
  r.inequality_holds = r.sum >= r.n;
  r.yu_bound_holds = r.classical_rank <= 2 * r.rho;

  ClassFlags& c = r.classes;
  c.nonnegative = a.is_nonnegative();
  c.symmetric = a.is_symmetric();
  c.psd = c.symmetric && psd_check(a).psd;
  c.zero_pm1 = c.symmetric && a.entries_in_zero_pm1() && a.has_zero_diagonal();

  std::optional<SignedGraph> graph;
  if (c.zero_pm1) {
    graph = graph_from_matrix(a);
    c.balanced = is_balanced(*graph).balanced;
    try {
      c.parity = cycle_parity_class(*graph, options.cycle_cap);
    } catch (const ResourceError&) {
      c.parity.reset();
    }
    r.ek_ok = ek_ok(*graph, r.rho);
  }
  if (c.psd) r.principal_rho = perm_rank_exact(a, true).rank;

  auto add = [&](std::string name, bool applicable, bool holds) {
    r.theorems.push_back({std::move(name), applicable, applicable && holds});
  };

  add("general_inequality", true, r.inequality_holds);

  bool truncated = true;
  for (std::size_t i = r.rho + 1; i <= r.n; ++i) truncated = truncated && sgn(r.poly.b(i)) == 0;
  add("coefficient_truncation", true, truncated);

  add("yu_bound", true, r.yu_bound_holds);

  add("ek_ok_criterion", c.zero_pm1,
      r.ek_ok && (r.identity_holds == (r.ek_ok->even != r.ek_ok->odd)));

  add("nonnegative_symmetric", c.nonnegative && c.symmetric, r.identity_holds);

  add("matching_rank_nonnegative", c.nonnegative,
      c.nonnegative && perm_rank_nonnegative(a) == r.rho);

  add("positive_semidefinite", c.psd,
      r.identity_holds && r.principal_rho && *r.principal_rho == r.rho);

  const bool balanced = c.zero_pm1 && c.balanced.value_or(false);
  add("balanced_signed", balanced,
      balanced && r.identity_holds && perm_rank_exact(a.abs()).rank == r.rho);

  const bool uniform = c.zero_pm1 && c.parity && *c.parity != CycleParity::Mixed;
  add("uniform_parity", uniform, r.identity_holds);

  return r;
}

nlohmann::json to_json(const VerifyReport& r) {
  using nlohmann::json;
  json classes = {
      {"nonnegative", r.classes.nonnegative},
      {"symmetric", r.classes.symmetric},
      {"psd", r.classes.psd},
      {"zero_pm1", r.classes.zero_pm1},
      {"balanced", r.classes.balanced ? json(*r.classes.balanced) : json(nullptr)},
      {"uniform_parity_class",
       r.classes.parity ? json(std::string(to_string(*r.classes.parity))) : json(nullptr)},
  };
  json theorems = json::array();
  for (const auto& t : r.theorems) {
    theorems.push_back({{"name", t.name}, {"applicable", t.applicable}, {"holds", t.holds}});
  }
  json poly = json::array();
  for (const auto& c : r.poly.coefficients()) poly.push_back(to_string(c));
  return {
      {"n", r.n},
      {"rho", r.rho},
      {"eta", r.eta},
      {"sum", r.sum},
      {"rank", r.classical_rank},
      {"classes", classes},
      {"identity", r.identity_holds},
      {"inequality", r.inequality_holds},
      {"yu_bound", r.yu_bound_holds},
      {"ek", r.ek_ok ? json(to_string(r.ek_ok->even)) : json(nullptr)},
      {"ok", r.ek_ok ? json(to_string(r.ek_ok->odd)) : json(nullptr)},
      {"witness",
       {{"rows", r.witness.rows.values()},
        {"cols", r.witness.cols.values()},
        {"permanent", to_string(r.witness.permanent)}}},
      {"polynomial", poly},
      {"theorems", theorems},
  };
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "n            " << r.n << '\n'
     << "rho_per      " << r.rho << '\n'
     << "eta_per      " << r.eta << '\n'
     << "rho + eta    " << r.sum << (r.identity_holds ? " (= n)" : r.sum > r.n ? " (> n)" : " (< n)")
     << '\n'
     << "rank         " << r.classical_rank << '\n'
     << "polynomial   " << r.poly.to_string() << '\n'
     << "identity     " << (r.identity_holds ? "holds" : "fails") << '\n'
     << "inequality   " << (r.inequality_holds ? "holds" : "fails") << '\n'
     << "yu bound     " << (r.yu_bound_holds ? "holds" : "fails") << '\n';
  if (r.ek_ok) {
    os << "E_" << r.ek_ok->k << "          " << to_string(r.ek_ok->even) << '\n'
       << "O_" << r.ek_ok->k << "          " << to_string(r.ek_ok->odd) << '\n';
  }
  os << "witness      rows {";
  for (std::size_t k = 0; k < r.witness.rows.size(); ++k) os << (k ? "," : "") << r.witness.rows[k];
  os << "} cols {";
  for (std::size_t k = 0; k < r.witness.cols.size(); ++k) os << (k ? "," : "") << r.witness.cols[k];
  os << "} per " << to_string(r.witness.permanent) << '\n';
  os << "classes     ";
  if (r.classes.nonnegative) os << " nonnegative";
  if (r.classes.symmetric) os << " symmetric";
  if (r.classes.psd) os << " psd";
  if (r.classes.zero_pm1) os << " zero_pm1";
  if (r.classes.balanced.value_or(false)) os << " balanced";
  if (r.classes.parity) os << " parity=" << to_string(*r.classes.parity);
  os << '\n';
  for (const auto& t : r.theorems) {
    if (!t.applicable) continue;
    os << "  " << (t.holds ? "ok   " : "FAIL ") << t.name << '\n';
  }
  return os.str();
}

GenConfig instance_config(const BatchOptions& options, std::uint64_t index) {
  GenConfig cfg = options.cfg;
  cfg.seed = instance_seed(options.cfg.seed, index);
  SplitMix64 shape(cfg.seed ^ 0x5851f42d4c957f2dULL);
  const std::size_t lo = options.n_min == 0 ? options.cfg.n : std::min(options.n_min, options.cfg.n);
  cfg.n = lo + shape.below(options.cfg.n - lo + 1);
  if ((cfg.kind == GenKind::UnbalancedSigned || cfg.kind == GenKind::UniformOddParity) && cfg.n < 3) {
    cfg.n = 3;
  }
  if (options.vary_density) cfg.density = Rational(static_cast<long>(2 + shape.below(9)), 10);
  return cfg;
}

BatchSummary batch_verify(const BatchOptions& options, const InstanceObserver& observer) {
  validate(options.cfg);
  const std::size_t count = options.count;
  std::vector<Instance> instances(count);
  std::vector<VerifyReport> reports(count);

  auto work = [&](std::size_t i) {
    Instance& inst = instances[i];
    inst.index = i;
    inst.cfg = instance_config(options, i);
    inst.matrix = generate(inst.cfg);
    reports[i] = verify(inst.matrix);
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) work(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  BatchSummary s;
  s.count = count;
  for (std::size_t i = 0; i < count; ++i) {
    const VerifyReport& r = reports[i];
    s.identity_holds += r.identity_holds;
    s.inequality_holds += r.inequality_holds;
    s.yu_bound_holds += r.yu_bound_holds;
    if (r.ek_ok) {
      ++s.criterion_applicable;
      s.criterion_agrees += r.identity_holds == (r.ek_ok->even != r.ek_ok->odd);
    }
    for (const auto& t : r.theorems) {
      auto it = std::find_if(s.theorems.begin(), s.theorems.end(),
                             [&](const TheoremTally& x) { return x.name == t.name; });
      if (it == s.theorems.end()) {
        s.theorems.push_back({t.name, 0, 0});
        it = std::prev(s.theorems.end());
      }
      it->applicable += t.applicable;
      it->holds += t.holds;
    }
    if (!r.violations().empty()) s.violations.push_back({instances[i], r});
    if (!r.identity_holds) s.identity_failures.push_back({instances[i], r});
    if (observer) observer(instances[i], r);
  }
  return s;
}

std::vector<Reproducer> search_counterexample(const BatchOptions& options) {
  BatchSummary s = batch_verify(options);
  std::vector<Reproducer> hits;
  for (auto& f : s.identity_failures) {
    // Regenerate from the recorded config and verify again.
    const Matrix again = generate(f.instance.cfg);
    const VerifyReport r = verify(again);
    if (again != f.instance.matrix || r.identity_holds || r.sum != f.report.sum) {
      throw std::logic_error("counterexample did not reproduce (index " +
                             std::to_string(f.instance.index) + ")");
    }
    hits.push_back(std::move(f));
  }
  return hits;
}

nlohmann::json to_json(const GenConfig& cfg) {
  nlohmann::json j = {{"kind", std::string(to_string(cfg.kind))},
                      {"n", cfg.n},
                      {"density", to_string(cfg.density)},
                      {"seed", cfg.seed}};
  if (cfg.extra) j["extra"] = *cfg.extra;
  if (cfg.identity_switching) j["identity_switching"] = true;
  return j;
}

nlohmann::json to_json(const Reproducer& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < r.instance.matrix.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : r.instance.matrix.row(i)) row.push_back(to_string(x));
    rows.push_back(row);
  }
  return {{"index", r.instance.index},
          {"config", to_json(r.instance.cfg)},
          {"matrix", rows},
          {"report", to_json(r.report)}};
}

nlohmann::json to_json(const BatchSummary& s) {
  nlohmann::json theorems = nlohmann::json::array();
  for (const auto& t : s.theorems) {
    theorems.push_back({{"name", t.name}, {"applicable", t.applicable}, {"holds", t.holds}});
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : s.violations) violations.push_back(to_json(v));
  return {{"count", s.count},
          {"identity_holds", s.identity_holds},
          {"identity_fails", s.count - s.identity_holds},
          {"inequality_holds", s.inequality_holds},
          {"yu_bound_holds", s.yu_bound_holds},
          {"criterion_applicable", s.criterion_applicable},
          {"criterion_agrees", s.criterion_agrees},
          {"theorems", theorems},
          {"violations", violations}};
}

}  // namespace permrank
