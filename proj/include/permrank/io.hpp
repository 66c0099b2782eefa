#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "permrank/matrix.hpp"
#include "permrank/signed_graph.hpp"

namespace permrank::io {

// Text formats. Files use 1-based vertex/row indices; the API is 0-based.
//
// Dense:       "rows cols" then rows*cols entries ("3", "-1/2", "0.25").
// Coordinate:  "%%MatrixMarket matrix coordinate <field> <symmetry>" header,
//              '%' comment lines, "rows cols nnz", then nnz "i j [value]".
//              field: integer | real | rational | pattern;
//              symmetry: general | symmetric | skew-symmetric.
// Graph:       "n m" then m lines "u v s", u < v, s one of + - +1 -1.
// Lines starting with '#' are comments in the dense and graph formats.

enum class Format { Auto, Dense, Coordinate, Graph };

Format parse_format(std::string_view name);

Matrix read_dense(std::istream& in);
Matrix read_coordinate(std::istream& in);
SignedGraph read_graph(std::istream& in);

void write_dense(std::ostream& out, const Matrix& a);
void write_coordinate(std::ostream& out, const Matrix& a);
void write_graph(std::ostream& out, const SignedGraph& g);

using Loaded = std::variant<Matrix, SignedGraph>;

/// Parses text in the given format; Auto sniffs the content. Throws InputError.
Loaded parse(std::string_view text, Format format = Format::Auto);

/// Reads a file; Auto uses the extension (.mtx, .graph/.edges) before
/// sniffing the content.
Loaded load(const std::string& path, Format format = Format::Auto);

/// Graphs become their signed adjacency.
Matrix as_matrix(const Loaded& loaded);
/// Matrices must be signed adjacencies (see graph_from_matrix).
SignedGraph as_graph(const Loaded& loaded);

}  // namespace permrank::io
