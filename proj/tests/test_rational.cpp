#include <doctest.h>

#include <random>

#include "bernmat/rational.hpp"

using namespace bernmat;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("binomial values and vanishing convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial * b! * (a-b)! = a!") {
  for (unsigned long a = 0; a <= 25; ++a) {
    for (unsigned long b = 0; b <= a; ++b) {
      CHECK(binomial(a, static_cast<long>(b)) * factorial(b) * factorial(a - b) == factorial(a));
    }
  }
}

TEST_CASE("rationals are always reduced") {
  const BigRational a(6, 4);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 2);

  const BigRational b(12, -9);
  CHECK(b.numerator() == -4);
  CHECK(b.denominator() == 3);

  const BigRational z(0, 7);
  CHECK(z.numerator() == 0);
  CHECK(z.denominator() == 1);
  CHECK(z.is_zero());

  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> d(-2000, 2000);
  for (int i = 0; i < 500; ++i) {
    long num = d(rng), den = d(rng);
    if (den == 0) den = 1;
    const BigRational q(num, den);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), BigInt(q.numerator()).get_mpz_t(), q.denominator().get_mpz_t());
    CHECK(g == 1);
    CHECK(q.denominator() > 0);
  }
}

TEST_CASE("arithmetic stays exact and reduced") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> d(-300, 300);
  for (int i = 0; i < 300; ++i) {
    long an = d(rng), ad = d(rng), bn = d(rng), bd = d(rng);
    if (ad == 0) ad = 7;
    if (bd == 0) bd = 11;
    const BigRational a(an, ad), b(bn, bd);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // cross-multiplication identity: a + b = (an*bd + bn*ad) / (ad*bd)
    const BigRational expected(BigInt(an) * BigInt(bd) + BigInt(bn) * BigInt(ad),
                               BigInt(ad) * BigInt(bd));
    CHECK(a + b == expected);
    // operation results stay in reduced form
    for (const BigRational& r : {a + b, a - b, a * b}) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), BigInt(r.numerator()).get_mpz_t(), r.denominator().get_mpz_t());
      CHECK(g == 1);
      CHECK(r.denominator() > 0);
    }
  }
}

TEST_CASE("division by zero reports the operands") {
  const BigRational a(3, 4);
  CHECK_THROWS_AS(a / BigRational(0), DivideByZeroError);
  CHECK_THROWS_WITH(a / BigRational(0), doctest::Contains("3/4"));
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), DivideByZeroError);
}

TEST_CASE("rendering and parsing round-trip") {
  CHECK(BigRational(-174611, 330).str() == "-174611/330");
  CHECK(BigRational(7).str() == "7");
  CHECK(BigRational(-3, 1).str() == "-3");
  CHECK(BigRational::from_string("1/6") == BigRational(1, 6));
  CHECK(BigRational::from_string("-14") == BigRational(-14));
  CHECK(BigRational::from_string("4/6") == BigRational(2, 3));
  CHECK_THROWS_AS(BigRational::from_string("x/3"), Error);
  CHECK_THROWS_AS(BigRational::from_string(""), Error);
  CHECK_THROWS_AS(BigRational::from_string("1/"), Error);
  CHECK_THROWS_AS(BigRational::from_string("1/0"), DivideByZeroError);

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    long den = d(rng);
    if (den == 0) den = 3;
    const BigRational q(d(rng), den);
    CHECK(BigRational::from_string(q.str()) == q);
  }
}

TEST_CASE("comparisons") {
  CHECK(BigRational(1, 3) < BigRational(1, 2));
  CHECK(BigRational(-1, 2) < BigRational(1, 3));
  CHECK(BigRational(2, 4) == BigRational(1, 2));
  CHECK(BigRational(5, 7).abs() == BigRational(5, 7));
  CHECK(BigRational(-5, 7).abs() == BigRational(5, 7));
  CHECK(BigRational(-5, 7).sign() == -1);
  CHECK(BigRational(0).sign() == 0);
}

TEST_CASE("bit budget safety valve") {
  reset_bignum_charge();
  set_bignum_bit_budget(1000);
  CHECK_NOTHROW(charge_bignum_bits(900));
  CHECK_THROWS_AS(charge_bignum_bits(200), BudgetError);
  set_bignum_bit_budget(std::nullopt);
  reset_bignum_charge();
  CHECK_NOTHROW(charge_bignum_bits(1u << 20));
  reset_bignum_charge();
}
