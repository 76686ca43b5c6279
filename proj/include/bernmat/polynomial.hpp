#ifndef BERNMAT_POLYNOMIAL_HPP
#define BERNMAT_POLYNOMIAL_HPP

#include <vector>

#include "bernmat/rational.hpp"

namespace bernmat {

/// Dense univariate polynomial over BigRational, coefficients ascending
/// (coefficients()[i] multiplies n^i). The zero polynomial has an empty
/// coefficient vector; otherwise the top coefficient is nonzero.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs);

  static RationalPolynomial constant(const BigRational& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// 0 beyond the stored degree.
  BigRational coefficient(std::size_t i) const;
  BigRational leading_coefficient() const;

  BigRational eval(const BigRational& x) const;
  /// p(n + a), expanded exactly.
  RationalPolynomial shifted(long a) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

  RationalPolynomial scaled(const BigRational& c) const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  void trim();
  std::vector<BigRational> coeffs_;
};

inline BigRational poly_eval(const RationalPolynomial& p, const BigRational& x) {
  return p.eval(x);
}

inline RationalPolynomial poly_shift(const RationalPolynomial& p, long a) {
  return p.shifted(a);
}

/// prod_{i=0}^{length-1} (n - offset - i); length 0 gives the constant 1.
RationalPolynomial falling_product_poly(long offset, unsigned length);

} // namespace bernmat

#endif // BERNMAT_POLYNOMIAL_HPP
