#include "bernmat/matrix.hpp"

#include <algorithm>

namespace bernmat {

namespace {

const BigRational kZero{};

using detail::ScaledTriRow;

// Divides a row (numerators + denominator) by its content and fixes the
// denominator sign.
void normalize_row(ScaledTriRow& r) {
  BigInt g = ::abs(r.den);
  for (const BigInt& a : r.num) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (sgn(r.den) < 0) g = -g;
  if (g != 1) {
    for (BigInt& a : r.num) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r.den.get_mpz_t(), r.den.get_mpz_t(), g.get_mpz_t());
  }
}

// Appends inverse rows (scaled_.size()+1 .. upto) by forward substitution,
// reading already-final earlier rows. Also mirrors them into `inv`.
void append_inverse_rows(const TriangularMatrix& m, std::vector<ScaledTriRow>& scaled,
                         TriangularMatrix& inv, unsigned upto) {
  inv.grow(upto);
  for (unsigned row = static_cast<unsigned>(scaled.size()) + 1; row <= upto; ++row) {
    // Scale the input row to integers: m(row, j) = p[j] / e.
    BigInt e(1);
    for (unsigned j = 1; j <= row; ++j) {
      const BigInt d = m.at(row, j).denominator();
      BigInt g;
      mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), d.get_mpz_t());
      e *= d / g;
    }
    std::vector<BigInt> p(row + 1);
    for (unsigned j = 1; j <= row; ++j) {
      p[j] = m.at(row, j).numerator() * (e / m.at(row, j).denominator());
    }
    if (sgn(p[row]) == 0) {
      throw StructureError("invert_triangular: zero diagonal entry at (" +
                           std::to_string(row) + ", " + std::to_string(row) + ")");
    }

    // Common denominator of the earlier rows that feed this one.
    BigInt lcm(1);
    for (unsigned j = 1; j < row; ++j) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), scaled[j - 1].den.get_mpz_t());
      lcm *= scaled[j - 1].den / g;
    }

    ScaledTriRow out;
    out.num.assign(row, BigInt(0));
    // x(row, k) = -(sum_{j=k}^{row-1} p[j] * x(j, k)) / m(row, row)
    //           = -(sum_j p[j] * a[j][k] * (lcm/d_j)) / (p[row] * lcm)
    BigInt pf;
    for (unsigned j = 1; j < row; ++j) {
      if (sgn(p[j]) == 0) continue;
      const ScaledTriRow& prev = scaled[j - 1];
      pf = p[j] * (lcm / prev.den);
      for (unsigned k = 1; k <= j; ++k) {
        if (sgn(prev.num[k - 1]) == 0) continue;
        mpz_addmul(out.num[k - 1].get_mpz_t(), pf.get_mpz_t(), prev.num[k - 1].get_mpz_t());
      }
    }
    for (unsigned k = 1; k < row; ++k) mpz_neg(out.num[k - 1].get_mpz_t(), out.num[k - 1].get_mpz_t());
    out.num[row - 1] = e * lcm;
    out.den = p[row] * lcm;
    normalize_row(out);

    unsigned long long bits = bit_size(out.den);
    for (unsigned k = 1; k <= row; ++k) {
      inv.set(row, k, BigRational(out.num[k - 1], out.den));
      bits += bit_size(out.num[k - 1]);
    }
    charge_bignum_bits(bits);
    scaled.push_back(std::move(out));
  }
}

} // namespace

TriangularMatrix::TriangularMatrix(unsigned size) { grow(size); }

void TriangularMatrix::grow(unsigned size) {
  while (rows_.size() < size) {
    rows_.emplace_back(rows_.size() + 1, BigRational(0));
  }
}

const BigRational& TriangularMatrix::at(unsigned row, unsigned col) const {
  if (row == 0 || col == 0 || row > size()) {
    throw TableError("triangular matrix of size " + std::to_string(size()) +
                     ": no entry (" + std::to_string(row) + ", " + std::to_string(col) + ")");
  }
  if (col > row) return kZero;
  return rows_[row - 1][col - 1];
}

void TriangularMatrix::set(unsigned row, unsigned col, BigRational v) {
  if (row == 0 || col == 0 || row > size() || col > row) {
    throw TableError("triangular matrix of size " + std::to_string(size()) +
                     ": cannot set (" + std::to_string(row) + ", " + std::to_string(col) + ")");
  }
  rows_[row - 1][col - 1] = std::move(v);
}

const std::vector<BigRational>& TriangularMatrix::row(unsigned row) const {
  if (row == 0 || row > size()) {
    throw TableError("triangular matrix of size " + std::to_string(size()) +
                     ": no row " + std::to_string(row));
  }
  return rows_[row - 1];
}

BigRational m_entry(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw Error("m_entry needs m, n >= 1");
  BigInt v = 2 * binomial(2 * n - 1, static_cast<long>(m)) *
             binomial(2 * m + 1, static_cast<long>(2 * n));
  if (m % 2 == 0) v = -v;
  return BigRational(v);
}

TriangularMatrix build_m(unsigned size) {
  TriangularMatrix t(size);
  for (unsigned m = 1; m <= size; ++m) {
    unsigned long long bits = 0;
    for (unsigned n = (m + 2) / 2; n <= m; ++n) {
      BigRational v = m_entry(m, n);
      bits += bit_size(v);
      t.set(m, n, std::move(v));
    }
    charge_bignum_bits(bits);
  }
  return t;
}

TriangularMatrix invert_triangular(const TriangularMatrix& m) {
  TriangularMatrix inv;
  std::vector<ScaledTriRow> scaled;
  append_inverse_rows(m, scaled, inv, m.size());
  return inv;
}

BigRational rid2_residual(unsigned n, const BernoulliTable& table) {
  if (n == 0) throw Error("rid2_residual needs n >= 1");
  const BigInt central = binomial(2 * n, static_cast<long>(n));
  BigRational sum(0);
  for (unsigned k = 0; k <= n; ++k) {
    const unsigned idx = n + k + 1;
    if (idx % 2 == 1 && idx > 1) continue; // odd Bernoulli vanishes
    const BigInt trinomial = central * binomial(n, static_cast<long>(k));
    sum += BigRational(trinomial) * divided_bernoulli(idx, table);
  }
  BigRational r = BigRational(static_cast<long>(4 * n + 2)) * sum;
  return n % 2 == 1 ? r : -r;
}

BigRational bernoulli_from_matrix(unsigned n, const TriangularMatrix& minv) {
  if (n == 0 || n > minv.size()) {
    throw TableError("bernoulli_from_matrix: inverse has size " +
                     std::to_string(minv.size()) + ", requested row " + std::to_string(n));
  }
  BigRational sum(0);
  for (const BigRational& v : minv.row(n)) sum += v;
  return sum;
}

DecompositionRow decomposition_row(unsigned n, const TriangularMatrix& minv) {
  if (n == 0 || n > minv.size()) {
    throw TableError("decomposition_row: inverse has size " + std::to_string(minv.size()) +
                     ", requested row " + std::to_string(n));
  }
  DecompositionRow out;
  out.n = n;
  int sign = 0;
  for (unsigned k = 1; k <= n; ++k) {
    const BigRational& v = minv.at(n, k);
    if (v.is_zero()) continue;
    if (sign == 0) {
      sign = v.sign();
    } else if (v.sign() != sign) {
      throw StructureError("decomposition row " + std::to_string(n) +
                           " mixes signs at column " + std::to_string(k) + ": " + v.str());
    }
    BigRational mag = v.abs();
    if (!out.terms.empty() && !(out.terms.back() > mag)) {
      throw StructureError("decomposition row " + std::to_string(n) +
                           " is not strictly decreasing at column " + std::to_string(k) +
                           ": " + out.terms.back().str() + " then " + mag.str());
    }
    out.terms.push_back(std::move(mag));
  }
  out.sign = sign == 0 ? +1 : sign;
  return out;
}

BigRational diag_closed_form(unsigned n) {
  if (n == 0) throw Error("diag_closed_form needs n >= 1");
  const BigInt f = factorial(n);
  return BigRational(f * f, factorial(2 * n + 1));
}

BigRational subdiag1_closed_form(unsigned n) {
  if (n < 2) throw Error("subdiag1_closed_form needs n >= 2");
  return BigRational(1, 6) * BigRational(static_cast<long>(n) - 2) *
         BigRational(factorial(n) * factorial(n - 1), factorial(2 * n - 1));
}

BigRational subdiag2_closed_form(unsigned n) {
  if (n < 3) throw Error("subdiag2_closed_form needs n >= 3");
  return BigRational(7, 360) * (BigRational(static_cast<long>(n)) - BigRational(8, 7)) *
         BigRational(static_cast<long>(n) - 3) *
         BigRational(factorial(n) * factorial(n - 2), factorial(2 * n - 3));
}

void MatrixInverseCache::ensure(unsigned size) {
  if (size <= m_.size()) return;
  m_.grow(size);
  for (unsigned m = static_cast<unsigned>(scaled_.size()) + 1; m <= size; ++m) {
    unsigned long long bits = 0;
    for (unsigned n = (m + 2) / 2; n <= m; ++n) {
      BigRational v = m_entry(m, n);
      bits += bit_size(v);
      m_.set(m, n, std::move(v));
    }
    charge_bignum_bits(bits);
  }
  append_inverse_rows(m_, scaled_, inv_, size);
}

} // namespace bernmat
