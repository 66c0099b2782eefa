#include "permrank/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "permrank/errors.hpp"

namespace permrank::io {
namespace {

// Whitespace tokens with '#' comment lines removed.
std::vector<std::string> tokens(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

std::size_t parse_count(const std::string& tok, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError(std::string("bad ") + what + ": '" + tok + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    throw InputError(std::string(what) + " out of range: '" + tok + "'");
  }
}

int parse_sign(const std::string& tok) {
  if (tok == "+" || tok == "+1" || tok == "1") return 1;
  if (tok == "-" || tok == "-1") return -1;
  throw InputError("bad edge sign '" + tok + "'");
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "auto") return Format::Auto;
  if (name == "dense") return Format::Dense;
  if (name == "mtx" || name == "coordinate") return Format::Coordinate;
  if (name == "graph") return Format::Graph;
  throw InputError("unknown format '" + std::string(name) + "'");
}

Matrix read_dense(std::istream& in) {
  const auto tok = tokens(in);
  if (tok.size() < 2) throw InputError("dense matrix: missing 'rows cols' header");
  const std::size_t rows = parse_count(tok[0], "row count");
  const std::size_t cols = parse_count(tok[1], "column count");
  if (tok.size() - 2 != rows * cols) {
    throw InputError("dense matrix: header says " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " but " + std::to_string(tok.size() - 2) +
                     " entries follow");
  }
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (std::size_t k = 2; k < tok.size(); ++k) data.push_back(parse_rational(tok[k]));
  return Matrix(rows, cols, std::move(data));
}

Matrix read_coordinate(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("coordinate matrix: empty input");
  std::istringstream hs(line);
  std::string banner, object, layout, field, symmetry;
  hs >> banner >> object >> layout >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix" || lower(layout) != "coordinate") {
    throw InputError("coordinate matrix: expected '%%MatrixMarket matrix coordinate' header");
  }
  field = lower(field);
  symmetry = lower(symmetry.empty() ? "general" : symmetry);
  if (field != "integer" && field != "real" && field != "rational" && field != "pattern") {
    throw InputError("coordinate matrix: unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric") {
    throw InputError("coordinate matrix: unsupported symmetry '" + symmetry + "'");
  }

  std::vector<std::string> tok;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%') continue;
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) tok.push_back(t);
  }
  if (tok.size() < 3) throw InputError("coordinate matrix: missing size line");
  const std::size_t rows = parse_count(tok[0], "row count");
  const std::size_t cols = parse_count(tok[1], "column count");
  const std::size_t nnz = parse_count(tok[2], "entry count");
  const std::size_t per_entry = field == "pattern" ? 2 : 3;
  if (tok.size() - 3 != nnz * per_entry) {
    throw InputError("coordinate matrix: declared " + std::to_string(nnz) +
                     " entries but payload does not match");
  }
  Matrix m(rows, cols);
  std::vector<bool> seen(rows * cols, false);
  for (std::size_t e = 0; e < nnz; ++e) {
    const std::size_t base = 3 + e * per_entry;
    const std::size_t i = parse_count(tok[base], "row index");
    const std::size_t j = parse_count(tok[base + 1], "column index");
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw InputError("coordinate matrix: index (" + tok[base] + ", " + tok[base + 1] +
                       ") out of range");
    }
    const Rational v = per_entry == 3 ? parse_rational(tok[base + 2]) : Rational(1);
    auto put = [&](std::size_t r, std::size_t c, const Rational& x) {
      if (seen[r * cols + c]) throw InputError("coordinate matrix: duplicate entry");
      seen[r * cols + c] = true;
      m(r, c) = x;
    };
    put(i - 1, j - 1, v);
    if (symmetry != "general" && i != j) {
      if (rows != cols) throw InputError("coordinate matrix: symmetric storage needs a square matrix");
      put(j - 1, i - 1, symmetry == "symmetric" ? v : Rational(-v));
    }
  }
  return m;
}

SignedGraph read_graph(std::istream& in) {
  const auto tok = tokens(in);
  if (tok.size() < 2) throw InputError("graph: missing 'n m' header");
  const std::size_t n = parse_count(tok[0], "vertex count");
  const std::size_t m = parse_count(tok[1], "edge count");
  if (tok.size() - 2 != 3 * m) {
    throw InputError("graph: header declares " + std::to_string(m) + " edges but payload does not match");
  }
  SignedGraph g(n);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t u = parse_count(tok[2 + 3 * e], "vertex");
    const std::size_t v = parse_count(tok[3 + 3 * e], "vertex");
    if (u < 1 || v < 1 || u > n || v > n) throw InputError("graph: vertex index out of range");
    if (u >= v) throw InputError("graph: edges must be listed with u < v");
    g.add_edge(u - 1, v - 1, parse_sign(tok[4 + 3 * e]));
  }
  return g;
}

void write_dense(std::ostream& out, const Matrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << to_string(a(i, j));
    out << '\n';
  }
}

void write_coordinate(std::ostream& out, const Matrix& a) {
  const bool integral = a.is_integral();
  std::size_t nnz = 0;
  for (const auto& x : a.entries()) nnz += sgn(x) != 0;
  out << "%%MatrixMarket matrix coordinate " << (integral ? "integer" : "rational") << " general\n";
  out << a.rows() << ' ' << a.cols() << ' ' << nnz << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) out << i + 1 << ' ' << j + 1 << ' ' << to_string(a(i, j)) << '\n';
}

void write_graph(std::ostream& out, const SignedGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  }
}

Loaded parse(std::string_view text, Format format) {
  std::istringstream in{std::string(text)};
  if (format == Format::Auto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text.substr(first).starts_with("%%MatrixMarket")) {
      format = Format::Coordinate;
    } else {
      std::istringstream probe{std::string(text)};
      const auto tok = tokens(probe);
      if (tok.size() < 2) throw InputError("input too short to be a matrix or graph");
      const std::size_t a = parse_count(tok[0], "dimension");
      const std::size_t b = parse_count(tok[1], "dimension");
      const std::size_t payload = tok.size() - 2;
      const bool has_sign_token = std::any_of(tok.begin() + 2, tok.end(), [](const std::string& t) {
        return t == "+" || t == "-";
      });
      const bool dense_fits = payload == a * b;
      const bool graph_fits = payload == 3 * b;
      if (graph_fits && (has_sign_token || !dense_fits)) {
        format = Format::Graph;
      } else {
        format = Format::Dense;
      }
    }
  }
  switch (format) {
    case Format::Coordinate:
      return read_coordinate(in);
    case Format::Graph:
      return read_graph(in);
    default:
      return read_dense(in);
  }
}

Loaded load(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (format == Format::Auto) {
    if (path.ends_with(".mtx")) format = Format::Coordinate;
    if (path.ends_with(".graph") || path.ends_with(".edges")) format = Format::Graph;
  }
  return parse(buffer.str(), format);
}

Matrix as_matrix(const Loaded& loaded) {
  if (const auto* m = std::get_if<Matrix>(&loaded)) return *m;
  return matrix_from_graph(std::get<SignedGraph>(loaded));
}

SignedGraph as_graph(const Loaded& loaded) {
  if (const auto* g = std::get_if<SignedGraph>(&loaded)) return *g;
  return graph_from_matrix(std::get<Matrix>(loaded));
}

}  // namespace permrank::io
