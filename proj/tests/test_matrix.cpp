#include <doctest.h>

#include <random>
#include <vector>

#include "bernmat/matrix.hpp"

using namespace bernmat;

namespace {

// Reference decomposition table: row n holds the unsigned terms summing
// to |B_{2n}|.
const std::vector<std::vector<BigRational>>& reference_rows() {
  static const std::vector<std::vector<BigRational>> rows = {
      {{1, 6}},
      {{1, 30}},
      {{1, 60}, {1, 140}},
      {{1, 45}, {1, 105}, {1, 630}},
      {{1, 20}, {3, 140}, {1, 252}, {1, 2772}},
      {{1, 6}, {1, 14}, {17, 1260}, {1, 693}, {1, 12012}},
      {{691, 900}, {691, 2100}, {59, 945}, {41, 5940}, {5, 10296}, {1, 51480}},
      {{14, 3}, {2, 1}, {359, 945}, {8, 189}, {4, 1287}, {1, 6435}, {1, 218790}},
      {{3617, 100}, {10851, 700}, {1237, 420}, {217, 660}, {293, 12012},
       {1, 780}, {7, 145860}, {1, 923780}},
      {{43867, 126}, {43867, 294}, {750167, 26460}, {6583, 2079}, {943, 4004},
       {1129, 90090}, {217, 437580}, {2, 138567}, {1, 3879876}},
  };
  return rows;
}

} // namespace

TEST_CASE("m_entry") {
  CHECK(m_entry(1, 1) == BigRational(6));
  CHECK(m_entry(2, 2) == BigRational(-30));
  CHECK(m_entry(2, 1) == BigRational(0));
  CHECK(m_entry(3, 2) == BigRational(70));
  CHECK_THROWS_AS(m_entry(0, 1), Error);
}

TEST_CASE("build_m") {
  const TriangularMatrix m1 = build_m(1);
  CHECK(m1.at(1, 1) == BigRational(6));

  const TriangularMatrix m2 = build_m(2);
  CHECK(m2.at(2, 1) == BigRational(0));
  CHECK(m2.at(2, 2) == BigRational(-30));

  // diagonal = (-1)^(n+1) (2n+1)!/(n!)^2, checked against the entry formula
  const TriangularMatrix m3 = build_m(3);
  CHECK(m3.at(1, 1) == BigRational(6));
  CHECK(m3.at(2, 2) == BigRational(-30));
  CHECK(m3.at(3, 3) == BigRational(140));
  for (unsigned n = 1; n <= 30; ++n) {
    const BigInt f = factorial(n);
    BigRational want(factorial(2 * n + 1), f * f);
    if (n % 2 == 0) want = -want;
    CHECK(m_entry(n, n) == want);
  }
}

TEST_CASE("1 = M.B row by row against the oracle table") {
  const BernoulliTable table = bernoulli_recurrence(120);
  const TriangularMatrix m = build_m(60);
  for (unsigned row = 1; row <= 60; ++row) {
    BigRational dot(0);
    for (unsigned n = 1; n <= row; ++n) dot += m.at(row, n) * table.value_at(2 * n);
    CHECK(dot == BigRational(1));
  }
}

TEST_CASE("band structure of M") {
  for (unsigned m = 1; m <= 40; ++m) {
    for (unsigned n = 1; n <= m; ++n) {
      const bool inside = n >= (m + 2) / 2 && n <= m;
      CHECK(m_entry(m, n).is_zero() == !inside);
    }
  }
}

TEST_CASE("invert_triangular basics") {
  TriangularMatrix id(3);
  for (unsigned i = 1; i <= 3; ++i) id.set(i, i, BigRational(1));
  const TriangularMatrix idinv = invert_triangular(id);
  for (unsigned i = 1; i <= 3; ++i) {
    for (unsigned j = 1; j <= i; ++j) {
      CHECK(idinv.at(i, j) == id.at(i, j));
    }
  }

  TriangularMatrix d(2);
  d.set(1, 1, BigRational(2));
  d.set(2, 2, BigRational(-4));
  const TriangularMatrix dinv = invert_triangular(d);
  CHECK(dinv.at(1, 1) == BigRational(1, 2));
  CHECK(dinv.at(2, 2) == BigRational(-1, 4));
  CHECK(dinv.at(2, 1) == BigRational(0));

  TriangularMatrix bad(2);
  bad.set(1, 1, BigRational(1));
  CHECK_THROWS_AS(invert_triangular(bad), StructureError);
}

TEST_CASE("inverse of M: row 3 and the product identity") {
  const TriangularMatrix minv = invert_triangular(build_m(3));
  CHECK(minv.at(3, 1) == BigRational(0));
  CHECK(minv.at(3, 2) == BigRational(1, 60));
  CHECK(minv.at(3, 3) == BigRational(1, 140));

  for (unsigned size : {1u, 5u, 20u}) {
    const TriangularMatrix m = build_m(size);
    const TriangularMatrix inv = invert_triangular(m);
    for (unsigned i = 1; i <= size; ++i) {
      for (unsigned k = 1; k <= i; ++k) {
        BigRational dot(0);
        for (unsigned j = k; j <= i; ++j) dot += m.at(i, j) * inv.at(j, k);
        CHECK(dot == (i == k ? BigRational(1) : BigRational(0)));
      }
    }
  }
}

TEST_CASE("rational triangular input is handled exactly") {
  TriangularMatrix t(3);
  t.set(1, 1, BigRational(2, 3));
  t.set(2, 1, BigRational(-1, 7));
  t.set(2, 2, BigRational(5, 2));
  t.set(3, 1, BigRational(1, 4));
  t.set(3, 2, BigRational(3, 11));
  t.set(3, 3, BigRational(-7, 13));
  const TriangularMatrix inv = invert_triangular(t);
  for (unsigned i = 1; i <= 3; ++i) {
    for (unsigned k = 1; k <= i; ++k) {
      BigRational dot(0);
      for (unsigned j = k; j <= i; ++j) dot += t.at(i, j) * inv.at(j, k);
      CHECK(dot == (i == k ? BigRational(1) : BigRational(0)));
    }
  }
}

TEST_CASE("random triangular matrices invert exactly") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> entry(-40, 40);
  std::uniform_int_distribution<unsigned> dim(1, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned size = dim(rng);
    TriangularMatrix t(size);
    for (unsigned i = 1; i <= size; ++i) {
      for (unsigned j = 1; j < i; ++j) {
        long den = entry(rng);
        if (den == 0) den = 1;
        t.set(i, j, BigRational(entry(rng), den));
      }
      long dnum = entry(rng);
      if (dnum == 0) dnum = 1;
      t.set(i, i, BigRational(dnum, 7));
    }
    const TriangularMatrix inv = invert_triangular(t);
    for (unsigned i = 1; i <= size; ++i) {
      for (unsigned k = 1; k <= i; ++k) {
        BigRational dot(0);
        for (unsigned j = k; j <= i; ++j) dot += t.at(i, j) * inv.at(j, k);
        REQUIRE(dot == (i == k ? BigRational(1) : BigRational(0)));
      }
    }
    const TriangularMatrix back = invert_triangular(inv);
    for (unsigned i = 1; i <= size; ++i) {
      for (unsigned k = 1; k <= i; ++k) {
        REQUIRE(back.at(i, k) == t.at(i, k));
      }
    }
  }
}

TEST_CASE("rid2 residual is exactly one") {
  const BernoulliTable table = bernoulli_recurrence(120);
  CHECK(rid2_residual(1, table) == BigRational(1));
  CHECK(rid2_residual(2, table) == BigRational(1));
  CHECK(rid2_residual(5, table) == BigRational(1));
  for (unsigned n = 1; n <= 60; ++n) {
    CHECK(rid2_residual(n, table) == BigRational(1));
  }
  CHECK_THROWS_AS(rid2_residual(60, bernoulli_recurrence(10)), TableError);
}

TEST_CASE("bernoulli_from_matrix matches the oracle") {
  const BernoulliTable table = bernoulli_recurrence(120);
  const TriangularMatrix minv = invert_triangular(build_m(60));
  CHECK(bernoulli_from_matrix(1, minv) == BigRational(1, 6));
  CHECK(bernoulli_from_matrix(6, minv) == BigRational(-691, 2730));
  CHECK(bernoulli_from_matrix(10, minv) == BigRational(-174611, 330));
  for (unsigned n = 1; n <= 60; ++n) {
    CHECK(bernoulli_from_matrix(n, minv) == table.value_at(2 * n));
  }
  CHECK_THROWS_AS(bernoulli_from_matrix(61, minv), TableError);
}

TEST_CASE("decomposition rows match the reference table") {
  const TriangularMatrix minv = invert_triangular(build_m(12));
  const auto& rows = reference_rows();
  for (unsigned n = 1; n <= 10; ++n) {
    const DecompositionRow row = decomposition_row(n, minv);
    CHECK(row.sign == (n % 2 == 1 ? +1 : -1));
    REQUIRE(row.terms.size() == rows[n - 1].size());
    for (std::size_t i = 0; i < row.terms.size(); ++i) {
      CHECK(row.terms[i] == rows[n - 1][i]);
    }
    CHECK(row.terms.size() == (n <= 2 ? 1 : n - 1));
  }
}

TEST_CASE("decomposition_row rejects structure violations") {
  TriangularMatrix fake(2);
  fake.set(1, 1, BigRational(1));
  fake.set(2, 1, BigRational(1, 2));
  fake.set(2, 2, BigRational(-1, 3));
  CHECK_THROWS_AS(decomposition_row(2, fake), StructureError); // mixed signs

  TriangularMatrix increasing(2);
  increasing.set(1, 1, BigRational(1));
  increasing.set(2, 1, BigRational(1, 3));
  increasing.set(2, 2, BigRational(1, 2));
  CHECK_THROWS_AS(decomposition_row(2, increasing), StructureError); // not descending

  const TriangularMatrix minv = invert_triangular(build_m(3));
  CHECK_THROWS_AS(decomposition_row(9, minv), TableError); // too small
}

TEST_CASE("closed forms for the diagonals") {
  CHECK(diag_closed_form(1) == BigRational(1, 6));
  CHECK(diag_closed_form(2) == BigRational(1, 30));
  CHECK(diag_closed_form(3) == BigRational(1, 140));

  CHECK(subdiag1_closed_form(2) == BigRational(0));
  CHECK(subdiag1_closed_form(3) == BigRational(1, 60));
  CHECK(subdiag1_closed_form(4) == BigRational(1, 105));

  CHECK(subdiag2_closed_form(3) == BigRational(0));
  CHECK(subdiag2_closed_form(4) == BigRational(1, 45));
  CHECK(subdiag2_closed_form(5) == BigRational(3, 140));

  CHECK_THROWS_AS(subdiag1_closed_form(1), Error);
  CHECK_THROWS_AS(subdiag2_closed_form(2), Error);

  const TriangularMatrix minv = invert_triangular(build_m(40));
  for (unsigned n = 1; n <= 40; ++n) {
    CHECK(diag_closed_form(n) == minv.at(n, n).abs());
    if (n >= 2) CHECK(subdiag1_closed_form(n) == minv.at(n, n - 1).abs());
    if (n >= 3) CHECK(subdiag2_closed_form(n) == minv.at(n, n - 2).abs());
  }
}

TEST_CASE("structural properties of the inverse rows") {
  const unsigned bound = 40;
  const TriangularMatrix minv = invert_triangular(build_m(bound));
  for (unsigned n = 1; n <= bound; ++n) {
    const DecompositionRow row = decomposition_row(n, minv); // throws on sign/order violations
    if (n >= 3) {
      CHECK(minv.at(n, 1).is_zero());
      CHECK(row.terms[1] / row.terms[0] == BigRational(3, 7));
    }
    // dominance: every term exceeds the subtotal of the smaller ones
    BigRational tail(0);
    for (std::size_t i = row.terms.size(); i-- > 1;) {
      tail += row.terms[i];
      CHECK(row.terms[i - 1] > tail);
    }
  }
}

TEST_CASE("incremental extension never revises rows") {
  MatrixInverseCache cache;
  cache.ensure(10);
  const BigRational r10 = cache.inverse().at(10, 7);
  cache.ensure(25);
  CHECK(cache.inverse().at(10, 7) == r10);

  const TriangularMatrix fresh = invert_triangular(build_m(25));
  for (unsigned i = 1; i <= 25; ++i) {
    for (unsigned k = 1; k <= i; ++k) {
      CHECK(cache.inverse().at(i, k) == fresh.at(i, k));
      CHECK(cache.m().at(i, k) == m_entry(i, k));
    }
  }
}
