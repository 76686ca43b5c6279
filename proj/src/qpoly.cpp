#include "bernmat/qpoly.hpp"

namespace bernmat {

namespace {

// v <- v * (s + c), in place.
void mul_linear(std::vector<BigInt>& v, long c) {
  v.push_back(v.back());
  for (std::size_t i = v.size() - 2; i >= 1; --i) {
    mpz_mul_si(v[i].get_mpz_t(), v[i].get_mpz_t(), c);
    v[i] += v[i - 1];
  }
  mpz_mul_si(v[0].get_mpz_t(), v[0].get_mpz_t(), c);
}

// v(s) <- v(s + a), repeated-Horner Taylor shift.
void shift_vector(std::vector<BigInt>& v, long a) {
  if (v.size() < 2 || a == 0) return;
  BigInt t;
  for (int i = static_cast<int>(v.size()) - 2; i >= 0; --i) {
    for (std::size_t k = static_cast<std::size_t>(i); k + 1 < v.size(); ++k) {
      mpz_mul_si(t.get_mpz_t(), v[k + 1].get_mpz_t(), a);
      v[k] += t;
    }
  }
}

} // namespace

const RationalPolynomial& QPolynomialFamily::q(unsigned l) {
  while (polys_.size() <= l) build_next_level();
  return polys_[l];
}

BigRational QPolynomialFamily::eval_exact(unsigned l, long n) {
  q(l); // force construction
  const ScaledPoly& p = shifted_[l];
  const BigInt x(n - static_cast<long>(l)); // Q_l argument s = n - l
  BigInt acc = p.num.back();
  for (auto it = p.num.rbegin() + 1; it != p.num.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return BigRational(acc, p.den);
}

void QPolynomialFamily::build_next_level() {
  const unsigned l = static_cast<unsigned>(polys_.size());

  if (l == 0) {
    first_fall_.assign(1, BigInt(1)); // empty product
  } else {
    // F_l(s) = (s-3)(s-4)...(s-l-2) gains the factor (s - (l+2)).
    mul_linear(first_fall_, -(static_cast<long>(l) + 2));
    // Each cached product R_{l,j}(s) Q_j(s) gains the factor (s + 2j - l).
    for (unsigned j = 0; j + 1 < l; ++j) {
      mul_linear(products_[j].num, 2 * static_cast<long>(j) - static_cast<long>(l));
    }
    // Newest term enters with its first factor (s + l - 2).
    products_.push_back(shifted_[l - 1]);
    mul_linear(products_.back().num, static_cast<long>(l) - 2);
  }

  // acc = (-1)^l F_l / (2l+3)!
  ScaledPoly acc;
  acc.num = first_fall_;
  if (l % 2 == 1) {
    for (BigInt& a : acc.num) mpz_neg(a.get_mpz_t(), a.get_mpz_t());
  }
  acc.den = factorial(2 * l + 3);

  // acc += (-1)^(l+j+1) P_j / [(2l+1-2j)! den(P_j)]
  for (unsigned j = 0; j < l; ++j) {
    const ScaledPoly& term = products_[j];
    BigInt term_den = term.den * factorial(2 * l + 1 - 2 * j);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), acc.den.get_mpz_t(), term_den.get_mpz_t());
    const BigInt acc_scale = term_den / g;
    const BigInt term_scale = acc.den / g;
    const bool negate = (l + j + 1) % 2 == 1;
    if (acc.num.size() < term.num.size()) acc.num.resize(term.num.size());
    for (std::size_t i = 0; i < acc.num.size(); ++i) {
      acc.num[i] *= acc_scale;
      if (i < term.num.size()) {
        if (negate) {
          mpz_submul(acc.num[i].get_mpz_t(), term.num[i].get_mpz_t(), term_scale.get_mpz_t());
        } else {
          mpz_addmul(acc.num[i].get_mpz_t(), term.num[i].get_mpz_t(), term_scale.get_mpz_t());
        }
      }
    }
    acc.den *= acc_scale;
  }

  // Reduce by the content.
  BigInt g = acc.den;
  for (const BigInt& a : acc.num) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (g != 1) {
    for (BigInt& a : acc.num) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(acc.den.get_mpz_t(), acc.den.get_mpz_t(), g.get_mpz_t());
  }

  if (acc.num.size() != l + 1 || sgn(acc.num.back()) == 0) {
    throw StructureError("q_" + std::to_string(l) + " does not have degree " + std::to_string(l));
  }

  // q_l(n) = Q_l(n - l): shift the numerator vector once, reduce per coefficient.
  std::vector<BigInt> shifted_num = acc.num;
  shift_vector(shifted_num, -static_cast<long>(l));
  std::vector<BigRational> coeffs;
  coeffs.reserve(shifted_num.size());
  unsigned long long bits = bit_size(acc.den);
  for (const BigInt& a : shifted_num) {
    coeffs.emplace_back(a, acc.den);
    bits += bit_size(a);
  }
  charge_bignum_bits(bits);

  shifted_.push_back(std::move(acc));
  polys_.emplace_back(std::move(coeffs));
}

const RationalPolynomial& q_polynomial(unsigned l, QPolynomialFamily& family) {
  return family.q(l);
}

BigRational term_from_q(unsigned n, unsigned k, QPolynomialFamily& family) {
  if (n < 2 || k < 2 || k > n) {
    throw Error("term_from_q needs n >= 2 and 2 <= k <= n, got n=" + std::to_string(n) +
                " k=" + std::to_string(k));
  }
  if (k == n) {
    const BigInt f = factorial(n);
    return BigRational(f * f, factorial(2 * n + 1));
  }
  const BigRational q_at_n = family.eval_exact(n - k - 1, static_cast<long>(n));
  return BigRational(factorial(n)) * q_at_n *
         BigRational(factorial(k) * (static_cast<long>(k) - 1), factorial(2 * k + 1));
}

BigRational b2n_from_q(unsigned n, QPolynomialFamily& family) {
  if (n == 0) throw Error("b2n_from_q needs n >= 1");
  const BigInt f = factorial(n);
  BigRational sum(f * f, factorial(2 * n + 1));
  for (unsigned k = 2; k + 1 <= n; ++k) {
    sum += term_from_q(n, k, family);
  }
  return sum;
}

namespace {

// (top)(top-1)...(top-length+1) as an exact integer.
BigInt descending_product(long top, unsigned length) {
  BigInt p(1);
  for (unsigned i = 0; i < length; ++i) p *= BigInt(top - static_cast<long>(i));
  return p;
}

} // namespace

BigRational q_scalar_recursion(unsigned l, long n) {
  if (n < static_cast<long>(l) + 3) {
    throw Error("q_scalar_recursion needs n >= l+3, got l=" + std::to_string(l) +
                " n=" + std::to_string(n));
  }
  // v[i] = q_i at argument n - l + i.
  std::vector<BigRational> v;
  v.reserve(l + 1);
  for (unsigned i = 0; i <= l; ++i) {
    const long arg = n - static_cast<long>(l) + static_cast<long>(i);
    BigRational s(descending_product(arg - static_cast<long>(i) - 3, i),
                  factorial(2 * i + 3));
    if (i % 2 == 1) s = -s;
    for (unsigned j = 0; j < i; ++j) {
      BigRational t(descending_product(arg - static_cast<long>(i) - 1 + static_cast<long>(j), i - j),
                    factorial(2 * i + 1 - 2 * j));
      t *= v[j];
      if ((i + j + 1) % 2 == 1) t = -t;
      s += t;
    }
    v.push_back(std::move(s));
  }
  return v[l];
}

} // namespace bernmat
