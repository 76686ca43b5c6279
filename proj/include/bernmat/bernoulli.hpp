#ifndef BERNMAT_BERNOULLI_HPP
#define BERNMAT_BERNOULLI_HPP

#include <string>
#include <vector>

#include "bernmat/rational.hpp"

namespace bernmat {

enum class BernoulliMethod { Recurrence, AkiyamaTanigawa, MatrixInverse, QPolynomial };

std::string method_name(BernoulliMethod m);

/// Memoized Bernoulli numbers at even indices, tagged with the method that
/// produced them. Odd entries >= 3 are verified zero during construction and
/// stored implicitly; B_1 = -1/2 (the convention the defining recurrence
/// forces; none of the verified identities involve it).
class BernoulliTable {
public:
  explicit BernoulliTable(BernoulliMethod method) : method_(method) {}

  BernoulliMethod method() const { return method_; }

  /// Largest index m such that value_at(m) is answerable.
  unsigned max_index() const;
  bool covers(unsigned m) const { return m <= max_index(); }

  /// B_m for any covered m (odd m >= 3 yield exact zero).
  BigRational value_at(unsigned m) const;

  /// B_{2n} by even-entry position.
  const BigRational& even_entry(unsigned n) const;

  /// Grows the table so that max_index() >= max_index. Already-stored
  /// entries are never revised; extension is verified to reproduce them.
  void extend_to(unsigned max_index);

private:
  void extend_recurrence(unsigned max_index);
  void extend_akiyama_tanigawa(unsigned max_index);

  BernoulliMethod method_;
  std::vector<BigRational> even_; // even_[n] = B_{2n}
};

/// Classical oracle #1: the defining recurrence
/// sum_{k=0}^{m} C(m+1, k) B_k = 0 with B_0 = 1.
BernoulliTable bernoulli_recurrence(unsigned max_index);

/// Classical oracle #2: the Akiyama-Tanigawa triangle. Must agree with the
/// recurrence exactly at every even index.
BernoulliTable bernoulli_akiyama_tanigawa(unsigned max_index);

/// beta_m = B_m / m for m >= 1.
BigRational divided_bernoulli(unsigned m, const BernoulliTable& table);

/// zeta(2n) = pi_coefficient * pi^(2n), exactly.
struct ZetaEvenValue {
  unsigned power;            // 2n
  BigRational pi_coefficient;
};

ZetaEvenValue zeta_even_exact(unsigned n, const BernoulliTable& table);

} // namespace bernmat

#endif // BERNMAT_BERNOULLI_HPP
