#include <doctest.h>

#include <vector>

#include "bernmat/bernoulli.hpp"
#include "bernmat/matrix.hpp"
#include "bernmat/qpoly.hpp"

using namespace bernmat;

namespace {

// Direct reference construction: falling products, poly_shift, dense
// rational polynomial algebra. Deliberately naive; the production family must
// reproduce it exactly.
const RationalPolynomial& q_reference(unsigned l, std::vector<RationalPolynomial>& memo) {
  while (memo.size() <= l) {
    const unsigned ll = static_cast<unsigned>(memo.size());
    RationalPolynomial acc =
        falling_product_poly(static_cast<long>(ll) + 3, ll)
            .scaled(BigRational(ll % 2 == 0 ? 1 : -1) / BigRational(factorial(2 * ll + 3)));
    for (unsigned j = 0; j < ll; ++j) {
      RationalPolynomial term =
          falling_product_poly(static_cast<long>(ll) + 1 - static_cast<long>(j), ll - j) *
          poly_shift(memo[j], static_cast<long>(j) - static_cast<long>(ll));
      term = term.scaled(BigRational((ll + j + 1) % 2 == 0 ? 1 : -1) /
                         BigRational(factorial(2 * ll + 1 - 2 * j)));
      acc += term;
    }
    memo.push_back(std::move(acc));
  }
  return memo[l];
}

} // namespace

TEST_CASE("the tabulated low-order polynomials") {
  QPolynomialFamily family;
  CHECK(family.q(0) == RationalPolynomial::constant(BigRational(1, 6)));
  CHECK(family.q(1) ==
        RationalPolynomial(std::vector<BigRational>{BigRational(-1, 45), BigRational(7, 360)}));
  CHECK(family.q(2) == RationalPolynomial(std::vector<BigRational>{
                           BigRational(1, 315), BigRational(-89, 15120), BigRational(31, 15120)}));
}

TEST_CASE("family matches the direct reference construction") {
  QPolynomialFamily family;
  std::vector<RationalPolynomial> memo;
  for (unsigned l = 0; l <= 40; ++l) {
    CHECK(family.q(l) == q_reference(l, memo));
  }
}

TEST_CASE("degree is exactly l") {
  QPolynomialFamily family;
  for (unsigned l = 0; l <= 60; ++l) {
    CHECK(family.q(l).degree() == static_cast<int>(l));
    CHECK_FALSE(family.q(l).leading_coefficient().is_zero());
  }
}

TEST_CASE("scalar recursion oracle agrees with the polynomials") {
  QPolynomialFamily family;
  for (unsigned l = 0; l <= 24; ++l) {
    for (long n = static_cast<long>(l) + 3; n <= static_cast<long>(l) + 8; ++n) {
      CHECK(q_scalar_recursion(l, n) == poly_eval(family.q(l), BigRational(n)));
      CHECK(q_scalar_recursion(l, n) == family.eval_exact(l, n));
    }
  }
  CHECK_THROWS_AS(q_scalar_recursion(3, 5), Error); // below the stated domain
}

TEST_CASE("term_from_q examples and matrix agreement") {
  QPolynomialFamily family;
  CHECK(term_from_q(3, 3, family) == BigRational(1, 140));
  CHECK(term_from_q(4, 2, family) == BigRational(1, 45));
  CHECK(term_from_q(5, 3, family) == BigRational(3, 140));
  CHECK_THROWS_AS(term_from_q(5, 1, family), Error);
  CHECK_THROWS_AS(term_from_q(5, 6, family), Error);

  const TriangularMatrix minv = invert_triangular(build_m(30));
  for (unsigned n = 2; n <= 30; ++n) {
    for (unsigned k = 2; k <= n; ++k) {
      CHECK(term_from_q(n, k, family) == minv.at(n, k).abs());
    }
  }
}

TEST_CASE("b2n_from_q reproduces the oracle magnitudes") {
  QPolynomialFamily family;
  CHECK(b2n_from_q(1, family) == BigRational(1, 6));
  CHECK(b2n_from_q(2, family) == BigRational(1, 30));
  CHECK(b2n_from_q(7, family) == BigRational(7, 6));

  const BernoulliTable oracle = bernoulli_recurrence(120);
  for (unsigned n = 1; n <= 60; ++n) {
    CHECK(b2n_from_q(n, family) == oracle.value_at(2 * n).abs());
  }
}

TEST_CASE("eval_exact equals coefficient evaluation") {
  QPolynomialFamily family;
  for (unsigned l : {0u, 1u, 5u, 17u, 33u}) {
    for (long n : {-4L, 0L, 3L, 100L}) {
      CHECK(family.eval_exact(l, n) == poly_eval(family.q(l), BigRational(n)));
    }
  }
}
