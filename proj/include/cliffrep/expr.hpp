#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cliffrep/multivector.hpp"
#include "cliffrep/rational_matrix.hpp"
#include "cliffrep/tables.hpp"

namespace cliffrep {

// Grammar (whitespace is ignored between tokens):
//
//   expr      = [sign] term { sign term } ;
//   sign      = "+" | "-" ;
//   term      = rational [ "*" ] { factor } | factor { factor } ;
//   factor    = [ "*" ] generator ;
//   generator = "e" digit { digit }       (* n <= 9: each digit is one generator *)
//             | "e" "[" digit { digit } "]" ;
//   rational  = digit { digit } [ "/" digit { digit } ] ;
//
// Adjacent generators multiply left to right under the geometric product.

/// Throws SyntaxError, IndexOutOfRange or DivisionByZero.
Multivector parse(std::string_view text, const Signature& sig);

enum class MvStyle { plain, latex };

/// Terms in ordinal order, zero terms dropped, unit coefficients elided on blades.
std::string format_multivector(const Multivector& u, MvStyle style = MvStyle::plain);

/// "e1*e2" or "{e_1} {e_2}"; "1" for the scalar blade.
std::string blade_name(IndexSet s, MvStyle style);

enum class MatrixFormat { text, csv, latex, json };

/// Throws std::invalid_argument for an unknown name.
MatrixFormat parse_matrix_format(std::string_view name);

std::string format_matrix(const RationalMatrix& m, MatrixFormat fmt);
std::string format_matrix(const MultTable& m, MatrixFormat fmt);
std::string format_scalar_table(const ScalarTable& g, MatrixFormat fmt);

/// Rows on lines, whitespace-separated rationals. Throws DimensionMismatch or
/// std::invalid_argument.
RationalMatrix parse_matrix_text(std::string_view text);
/// Array of arrays of integers or "p/q" strings.
RationalMatrix parse_matrix_json(std::string_view text);
/// Array of arrays of {"sign", "ordinal"} objects.
std::vector<std::vector<TableEntry>> parse_table_json(std::string_view text);

}  // namespace cliffrep
