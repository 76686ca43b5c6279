#ifndef BERNMAT_MATRIX_HPP
#define BERNMAT_MATRIX_HPP

#include <vector>

#include "bernmat/bernoulli.hpp"
#include "bernmat/rational.hpp"

namespace bernmat {

namespace detail {
/// One inverse row held as integer numerators over a shared denominator.
struct ScaledTriRow {
  std::vector<BigInt> num; // cols 1..m
  BigInt den;              // > 0
};
} // namespace detail

/// Lower-triangular square matrix of exact rationals, 1-based (row m, col n).
/// Entries above the diagonal read as zero.
class TriangularMatrix {
public:
  TriangularMatrix() = default;
  explicit TriangularMatrix(unsigned size);

  unsigned size() const { return static_cast<unsigned>(rows_.size()); }

  const BigRational& at(unsigned row, unsigned col) const;
  void set(unsigned row, unsigned col, BigRational v);

  /// Entries (row, 1) .. (row, row).
  const std::vector<BigRational>& row(unsigned row) const;

  /// Grows to `size` rows, zero-filled; existing rows untouched.
  void grow(unsigned size);

private:
  std::vector<std::vector<BigRational>> rows_;
};

/// M_{m,n} = 2 (-1)^(m+1) C(2n-1, m) C(2m+1, 2n); zero outside the band
/// ceil((m+1)/2) <= n <= m.
BigRational m_entry(unsigned m, unsigned n);

/// M truncated to size x size. Truncation is exact: identities among the
/// first `size` rows never involve later columns.
TriangularMatrix build_m(unsigned size);

/// Exact inverse by forward substitution, column by column. Throws
/// StructureError on a zero diagonal entry.
TriangularMatrix invert_triangular(const TriangularMatrix& m);

/// Right-hand side of the finite Bernoulli identity
/// 1 = (-1)^(n+1) (4n+2) sum_{k=0}^n (2n)!/(n! k! (n-k)!) B_{n+k+1}/(n+k+1);
/// equals exactly 1 whenever the identity holds.
BigRational rid2_residual(unsigned n, const BernoulliTable& table);

/// sum_k Minv(n, k) = B_{2n}, sign included.
BigRational bernoulli_from_matrix(unsigned n, const TriangularMatrix& minv);

/// The unsigned nonzero entries of row n of Minv, in ascending column order
/// (asserted to coincide with strictly descending magnitude), summing to
/// |B_{2n}|. sign = (-1)^(n+1), the shared sign of the row.
struct DecompositionRow {
  unsigned n = 0;
  std::vector<BigRational> terms;
  int sign = +1;
};

/// Throws StructureError if the row mixes signs or the descending-magnitude
/// order is violated (reported, never silently fixed).
DecompositionRow decomposition_row(unsigned n, const TriangularMatrix& minv);

/// |Minv_{n,n}| = (n!)^2 / (2n+1)!
BigRational diag_closed_form(unsigned n);
/// |Minv_{n,n-1}| = (1/6) (n-2) n!(n-1)! / (2n-1)!   for n >= 2
BigRational subdiag1_closed_form(unsigned n);
/// |Minv_{n,n-2}| = (7/360) (n - 8/7)(n-3) n!(n-2)! / (2n-3)!   for n >= 3
BigRational subdiag2_closed_form(unsigned n);

/// Incrementally extendable M and M^-1. Because M is lower triangular the
/// first N rows of the inverse are final; ensure() only appends rows.
class MatrixInverseCache {
public:
  void ensure(unsigned size);
  unsigned size() const { return m_.size(); }
  const TriangularMatrix& m() const { return m_; }
  const TriangularMatrix& inverse() const { return inv_; }

private:
  TriangularMatrix m_;
  TriangularMatrix inv_;
  std::vector<detail::ScaledTriRow> scaled_; // inverse rows kept in scaled form
};

} // namespace bernmat

#endif // BERNMAT_MATRIX_HPP
