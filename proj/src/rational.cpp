#include "bernmat/rational.hpp"

#include <atomic>
#include <cctype>

namespace bernmat {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

namespace {

mpq_class make_canonical(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) {
    throw DivideByZeroError("rational with zero denominator: " + num.get_str() + "/0");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

} // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den)
    : v_(make_canonical(num, den)) {}

BigRational::BigRational(long num, long den)
    : v_(make_canonical(BigInt(num), BigInt(den))) {}

BigRational BigRational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num_part(text.substr(0, slash));
  std::string den_part = slash == std::string_view::npos
                             ? std::string("1")
                             : std::string(text.substr(slash + 1));
  BigInt num, den;
  if (num_part.empty() || mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0) {
    throw Error("malformed rational literal: '" + std::string(text) + "'");
  }
  if (den_part.empty() || mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0) {
    throw Error("malformed rational literal: '" + std::string(text) + "'");
  }
  return BigRational(num, den);
}

BigRational BigRational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return BigRational(std::move(r), canonical_tag{});
}

std::string BigRational::str() const { return v_.get_str(); }

BigRational BigRational::operator-() const {
  mpq_class r;
  mpq_neg(r.get_mpq_t(), v_.get_mpq_t());
  return BigRational(std::move(r), canonical_tag{});
}

BigRational& BigRational::operator+=(const BigRational& o) {
  v_ += o.v_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  v_ -= o.v_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  v_ *= o.v_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) {
    throw DivideByZeroError("division by zero: (" + str() + ") / (0)");
  }
  v_ /= o.v_;
  return *this;
}

// ---- bit budget ----

namespace {
std::atomic<unsigned long long> g_budget_bits{0}; // 0 = unlimited
std::atomic<unsigned long long> g_charged_bits{0};
} // namespace

void set_bignum_bit_budget(std::optional<unsigned long long> bits) {
  g_budget_bits.store(bits.value_or(0));
}

std::optional<unsigned long long> bignum_bit_budget() {
  const auto b = g_budget_bits.load();
  if (b == 0) return std::nullopt;
  return b;
}

void reset_bignum_charge() { g_charged_bits.store(0); }

unsigned long long bignum_bits_charged() { return g_charged_bits.load(); }

void charge_bignum_bits(unsigned long long bits) {
  const auto total = g_charged_bits.fetch_add(bits) + bits;
  const auto cap = g_budget_bits.load();
  if (cap != 0 && total > cap) {
    throw BudgetError("bignum bit budget exceeded: " + std::to_string(total) +
                      " bits charged against BERNMAT_MAX_BITS=" + std::to_string(cap));
  }
}

unsigned long long bit_size(const BigInt& n) {
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

unsigned long long bit_size(const BigRational& q) {
  return bit_size(q.numerator()) + bit_size(q.denominator());
}

} // namespace bernmat
