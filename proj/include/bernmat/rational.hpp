#ifndef BERNMAT_RATIONAL_HPP
#define BERNMAT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bernmat/errors.hpp"

namespace bernmat {

/// Arbitrary-precision signed integer (canonical limbs, sign carried by GMP).
using BigInt = mpz_class;

/// n! exactly.
BigInt factorial(unsigned long n);

/// C(n, k); 0 when k < 0 or k > n (the vanishing convention the matrix band
/// structure relies on).
BigInt binomial(unsigned long n, long k);

/// Exact reduced fraction. Invariants: gcd(|num|, den) = 1, den > 0,
/// zero is 0/1. Maintained on every construction and operation.
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {} // NOLINT: implicit by design, mirrors integer literals
  explicit BigRational(const BigInt& n) : v_(n) {}
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den);

  /// Parses "num" or "num/den" (base 10). Throws Error on malformed text,
  /// DivideByZeroError on a zero denominator.
  static BigRational from_string(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  BigRational abs() const;

  double to_double() const { return v_.get_d(); }

  /// Canonical rendering: "num/den", or just "num" when den = 1.
  std::string str() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  const mpq_class& raw() const { return v_; }

private:
  struct canonical_tag {};
  BigRational(mpq_class q, canonical_tag) : v_(std::move(q)) {}

  mpq_class v_; // always canonical
};

inline BigRational abs(const BigRational& q) { return q.abs(); }

// ---- bignum bit budget (BERNMAT_MAX_BITS safety valve) ----
//
// An optional global cap on the total bits retained in long-lived exact
// structures (Bernoulli tables, triangular matrices, polynomial families).
// Coarse by design: charged when a structure grows, not per temporary.

void set_bignum_bit_budget(std::optional<unsigned long long> bits);
std::optional<unsigned long long> bignum_bit_budget();
void reset_bignum_charge();
unsigned long long bignum_bits_charged();

/// Adds `bits` to the running total; throws BudgetError once the cap
/// is exceeded.
void charge_bignum_bits(unsigned long long bits);

unsigned long long bit_size(const BigInt& n);
unsigned long long bit_size(const BigRational& q);

} // namespace bernmat

#endif // BERNMAT_RATIONAL_HPP
