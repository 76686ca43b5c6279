#include "bernmat/polynomial.hpp"

namespace bernmat {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) {
  return RationalPolynomial(std::vector<BigRational>{c});
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

BigRational RationalPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? BigRational(0) : coeffs_.back();
}

BigRational RationalPolynomial::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::shifted(long a) const {
  // Repeated-Horner Taylor shift; exactly the binomial expansion of p(n+a).
  std::vector<BigRational> c = coeffs_;
  const BigRational shift(a);
  if (c.size() >= 2 && a != 0) {
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
      for (std::size_t k = static_cast<std::size_t>(i); k + 1 < c.size(); ++k) {
        c[k] += shift * c[k + 1];
      }
    }
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial();
  std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::scaled(const BigRational& c) const {
  if (c.is_zero()) return RationalPolynomial();
  std::vector<BigRational> r = coeffs_;
  for (auto& x : r) x *= c;
  return RationalPolynomial(std::move(r));
}

RationalPolynomial falling_product_poly(long offset, unsigned length) {
  std::vector<BigRational> c{BigRational(1)};
  c.reserve(length + 1);
  for (unsigned i = 0; i < length; ++i) {
    // multiply by (n - offset - i)
    const BigRational root(-(offset + static_cast<long>(i)));
    c.push_back(c.back());
    for (std::size_t k = c.size() - 2; k >= 1; --k) {
      c[k] = c[k - 1] + root * c[k];
    }
    c[0] *= root;
  }
  return RationalPolynomial(std::move(c));
}

} // namespace bernmat
