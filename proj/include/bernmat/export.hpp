#ifndef BERNMAT_EXPORT_HPP
#define BERNMAT_EXPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "bernmat/matrix.hpp"
#include "bernmat/qpoly.hpp"
#include "bernmat/rational.hpp"

namespace bernmat {

enum class OutputFormat { Plain, Json, Csv };

/// "plain" | "json" | "csv"; throws Error otherwise.
OutputFormat parse_format(std::string_view name);

/// Ragged rows of exact rationals; the shared shape of every export.
using Triangle = std::vector<std::vector<BigRational>>;

/// The requested rows of M (integers, denominator 1).
Triangle m_triangle(unsigned rows);
/// The requested rows of M^-1, signs included.
Triangle minv_triangle(const TriangularMatrix& minv, unsigned rows);
/// Unsigned decomposition terms of |B_{2n}|, row n.
Triangle terms_triangle(const TriangularMatrix& minv, unsigned rows);
/// Coefficients of q_0..q_{rows-1}, ascending degree.
Triangle qcoeffs_triangle(QPolynomialFamily& family, unsigned rows);

/// One JSON document: nested arrays of "num/den" strings.
std::string triangle_to_json(const Triangle& t);
/// Exact inverse of triangle_to_json (bit-identical rationals).
Triangle triangle_from_json(std::string_view text);

/// RFC-4180-style CSV, LF line endings. Header names the row/column indices:
/// "row,col,..." with 1-based indices for matrix-shaped exports,
/// "l,power,..." (0-based) for polynomial coefficients.
std::string triangle_to_csv(const Triangle& t, bool zero_based_poly_schema = false);
Triangle triangle_from_csv(std::string_view text);

/// Space-separated rows for terminals.
std::string triangle_to_plain(const Triangle& t);

} // namespace bernmat

#endif // BERNMAT_EXPORT_HPP
