// permrank: permanents, permanental polynomials, permanental rank and
// nullity, with theorem checks over seeded random instances.
//
// Exit codes: 0 ok, 1 theorem violation, 2 input error, 3 resource cap.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "permrank/errors.hpp"
#include "permrank/generators.hpp"
#include "permrank/io.hpp"
#include "permrank/perm_rank.hpp"
#include "permrank/permanent.hpp"
#include "permrank/polynomial.hpp"
#include "permrank/sachs.hpp"
#include "permrank/verify.hpp"

namespace {

using namespace permrank;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct InputArgs {
  std::string path;
  std::string format = "auto";

  io::Loaded load() const { return io::load(path, io::parse_format(format)); }
};

void add_input(CLI::App* cmd, InputArgs& in, const char* what) {
  cmd->add_option("input", in.path, what)->required();
  cmd->add_option("--format", in.format, "auto | dense | mtx | graph")
      ->check(CLI::IsMember({"auto", "dense", "mtx", "coordinate", "graph"}));
}

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t n_min = 0;
  std::uint64_t seed = 0;
  std::string density = "1/2";
  std::optional<std::int64_t> extra;
  std::size_t count = 0;
  bool vary_density = false;
  unsigned threads = 1;
  bool json = false;

  GenConfig config() const {
    GenConfig cfg;
    cfg.kind = parse_gen_kind(kind);
    cfg.n = n;
    cfg.seed = seed;
    cfg.density = parse_rational(density);
    cfg.extra = extra;
    return cfg;
  }

  BatchOptions batch() const {
    BatchOptions b;
    b.cfg = config();
    b.count = count;
    b.n_min = n_min;
    b.vary_density = vary_density;
    b.threads = threads;
    return b;
  }
};

void add_gen_options(CLI::App* cmd, GenArgs& g, bool batch) {
  cmd->add_option("--kind", g.kind,
                  "pm1_symmetric | nonneg_symmetric | gram_psd | balanced_signed | "
                  "unbalanced_signed | uniform_odd_parity")
      ->required();
  cmd->add_option("--n", g.n, batch ? "largest instance size" : "instance size")->required();
  cmd->add_option("--seed", g.seed, "64-bit seed")->required();
  cmd->add_option("--density", g.density, "edge/entry density in [0,1], e.g. 1/2 or 0.3");
  cmd->add_option("--extra", g.extra, "gram_psd: inner dimension; nonneg_symmetric: max entry");
  if (batch) {
    cmd->add_option("--count", g.count, "number of instances")->required();
    cmd->add_option("--n-min", g.n_min, "smallest instance size (default: --n)");
    cmd->add_flag("--vary-density", g.vary_density, "draw density per instance");
    cmd->add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));
  }
}

std::string json_list(const IndexSet& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + std::to_string(s[k]);
  return out + "]";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact permanents, permanental polynomials, permanental rank and nullity"};
  app.require_subcommand(1);

  unsigned threads = 1;
  std::string isa = "auto";

  InputArgs per_in;
  auto* per_cmd = app.add_subcommand("per", "permanent of a square matrix");
  add_input(per_cmd, per_in, "matrix file");
  per_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  per_cmd->add_option("--isa", isa, "kernel variant")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  InputArgs poly_in;
  bool raw_sign = false;
  bool coefficients = false;
  auto* poly_cmd = app.add_subcommand("poly", "permanental polynomial (monic by default)");
  add_input(poly_cmd, poly_in, "matrix file");
  poly_cmd->add_flag("--raw-sign", raw_sign, "emit per(A - xI) instead of per(xI - A)");
  poly_cmd->add_flag("--coefficients", coefficients, "also print the coefficient list");
  poly_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));

  InputArgs rank_in;
  bool principal_only = false;
  bool witness = false;
  auto* rank_cmd = app.add_subcommand("rank", "permanental rank");
  add_input(rank_cmd, rank_in, "matrix file");
  rank_cmd->add_flag("--principal-only", principal_only, "search principal submatrices only");
  rank_cmd->add_flag("--witness", witness, "print the witness as JSON (0-based)");

  InputArgs nullity_in;
  auto* nullity_cmd = app.add_subcommand("nullity", "permanental nullity");
  add_input(nullity_cmd, nullity_in, "matrix file");

  InputArgs balance_in;
  auto* balance_cmd = app.add_subcommand("balance", "balance test with certificate");
  add_input(balance_cmd, balance_in, "graph or signed adjacency file");

  InputArgs parity_in;
  std::size_t cycle_cap = kDefaultCycleCap;
  auto* parity_cmd = app.add_subcommand("parity", "cycle parity class");
  add_input(parity_cmd, parity_in, "graph or signed adjacency file");
  parity_cmd->add_option("--cycle-cap", cycle_cap, "give up after this many cycles");

  InputArgs sachs_in;
  std::size_t order = 0;
  bool split = false;
  auto* sachs_cmd = app.add_subcommand("sachs", "signed Sachs coefficient s_k");
  add_input(sachs_cmd, sachs_in, "graph or signed adjacency file");
  sachs_cmd->add_option("--order,-k", order, "order k")->required();
  sachs_cmd->add_flag("--split", split, "print E_k and O_k");

  InputArgs verify_in;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "check every applicable theorem");
  add_input(verify_cmd, verify_in, "matrix file");
  verify_cmd->add_flag("--json", verify_json, "JSON report");

  GenArgs batch_args;
  auto* batch_cmd = app.add_subcommand("batch", "verify seeded random instances");
  add_gen_options(batch_cmd, batch_args, true);
  batch_cmd->add_flag("--json", batch_args.json, "JSON summary");

  GenArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "look for rank-nullity identity failures");
  add_gen_options(search_cmd, search_args, true);

  GenArgs gen_args;
  std::string out_path;
  std::string out_format = "dense";
  auto* gen_cmd = app.add_subcommand("gen", "write one generated instance");
  add_gen_options(gen_cmd, gen_args, false);
  gen_cmd->add_option("-o,--output", out_path, "output file")->required();
  gen_cmd->add_option("--format", out_format, "dense | mtx | graph")
      ->check(CLI::IsMember({"dense", "mtx", "graph"}));

  std::string example_name;
  std::string example_format = "dense";
  auto* example_cmd = app.add_subcommand("example", "print a built-in example matrix");
  example_cmd->add_option("name", example_name, "example_gen | matrix_B")->required();
  example_cmd->add_option("--format", example_format, "dense | mtx | graph")
      ->check(CLI::IsMember({"dense", "mtx", "graph"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  auto write_matrix = [](std::ostream& os, const Matrix& m, const std::string& format) {
    if (format == "mtx") {
      io::write_coordinate(os, m);
    } else if (format == "graph") {
      io::write_graph(os, graph_from_matrix(m));
    } else {
      io::write_dense(os, m);
    }
  };

  if (*per_cmd) {
    PermanentOptions opt;
    opt.threads = threads;
    opt.isa = isa == "scalar" ? kernels::IsaRequest::Scalar
              : isa == "avx2" ? kernels::IsaRequest::Avx2
                              : kernels::IsaRequest::Auto;
    std::cout << to_string(permanent(io::as_matrix(per_in.load()), opt)) << '\n';
    return 0;
  }
  if (*poly_cmd) {
    const Matrix a = io::as_matrix(poly_in.load());
    PolyOptions opt;
    opt.threads = threads;
    const Polynomial p = raw_sign ? perm_poly_raw(a, opt) : perm_poly(a, opt);
    std::cout << p.to_string() << '\n';
    if (coefficients) std::cout << p.coefficient_list() << '\n';
    return 0;
  }
  if (*rank_cmd) {
    const PermRankResult r = perm_rank_exact(io::as_matrix(rank_in.load()), principal_only);
    std::cout << r.rank << '\n';
    if (witness) {
      std::cout << "{\"rows\": " << json_list(r.rows) << ", \"cols\": " << json_list(r.cols)
                << ", \"permanent\": \"" << to_string(r.permanent) << "\"}\n";
    }
    return 0;
  }
  if (*nullity_cmd) {
    std::cout << perm_nullity(io::as_matrix(nullity_in.load())) << '\n';
    return 0;
  }
  if (*balance_cmd) {
    const SignedGraph g = io::as_graph(balance_in.load());
    const BalanceCertificate cert = is_balanced(g);
    if (cert.balanced) {
      std::cout << "balanced\nswitching:";
      for (int d : cert.switching->values()) std::cout << ' ' << (d > 0 ? "+1" : "-1");
    } else {
      std::cout << "unbalanced\nnegative cycle:";
      for (std::size_t v : cert.negative_cycle) std::cout << ' ' << v + 1;
    }
    std::cout << '\n';
    return 0;
  }
  if (*parity_cmd) {
    std::cout << to_string(cycle_parity_class(io::as_graph(parity_in.load()), cycle_cap)) << '\n';
    return 0;
  }
  if (*sachs_cmd) {
    const SignedGraph g = io::as_graph(sachs_in.load());
    const EkOkResult r = ek_ok(g, order);
    if (split) {
      std::cout << "E_" << order << " = " << to_string(r.even) << '\n'
                << "O_" << order << " = " << to_string(r.odd) << '\n';
    } else {
      std::cout << to_string(r.s) << '\n';
    }
    return 0;
  }
  if (*verify_cmd) {
    const VerifyReport r = verify(io::as_matrix(verify_in.load()));
    if (verify_json) {
      std::cout << to_json(r).dump(2) << '\n';
    } else {
      std::cout << to_text(r);
    }
    if (!r.violations().empty()) {
      std::cerr << "theorem violation: " << r.violations().front() << '\n';
      return kExitViolation;
    }
    return 0;
  }
  if (*batch_cmd) {
    const BatchSummary s = batch_verify(batch_args.batch());
    if (batch_args.json) {
      std::cout << to_json(s).dump(2) << '\n';
    } else {
      std::cout << "instances          " << s.count << '\n'
                << "identity holds     " << s.identity_holds << '\n'
                << "identity fails     " << s.count - s.identity_holds << '\n'
                << "inequality holds   " << s.inequality_holds << '\n'
                << "yu bound holds     " << s.yu_bound_holds << '\n'
                << "criterion agrees   " << s.criterion_agrees << " / " << s.criterion_applicable
                << '\n';
      for (const auto& t : s.theorems) {
        std::cout << "  " << t.name << ": " << t.holds << " / " << t.applicable << '\n';
      }
    }
    if (!s.violations.empty()) {
      std::cerr << "theorem violation, reproducer:\n" << to_json(s.violations.front()).dump(2) << '\n';
      return kExitViolation;
    }
    return 0;
  }
  if (*search_cmd) {
    const auto hits = search_counterexample(search_args.batch());
    nlohmann::json out = nlohmann::json::array();
    bool violation = false;
    for (const auto& h : hits) {
      out.push_back(to_json(h));
      violation = violation || !h.report.violations().empty();
    }
    std::cout << out.dump(2) << '\n';
    std::cerr << hits.size() << " counterexample(s) to the rank-nullity identity\n";
    return violation ? kExitViolation : 0;
  }
  if (*gen_cmd) {
    const GenConfig cfg = gen_args.config();
    std::ofstream os(out_path);
    if (!os) throw InputError("cannot write '" + out_path + "'");
    write_matrix(os, generate(cfg), out_format);
    return 0;
  }
  if (*example_cmd) {
    write_matrix(std::cout, builtin_example(example_name), example_format);
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const permrank::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const permrank::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  }
}
