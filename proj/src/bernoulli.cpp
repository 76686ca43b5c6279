#include "bernmat/bernoulli.hpp"

namespace bernmat {

std::string method_name(BernoulliMethod m) {
  switch (m) {
    case BernoulliMethod::Recurrence: return "recurrence";
    case BernoulliMethod::AkiyamaTanigawa: return "akiyama";
    case BernoulliMethod::MatrixInverse: return "matrix";
    case BernoulliMethod::QPolynomial: return "qpoly";
  }
  return "?";
}

unsigned BernoulliTable::max_index() const {
  if (even_.empty()) return 0;
  // B_{2n} for n = size-1 is stored, so the next odd index is answerable too.
  return 2 * static_cast<unsigned>(even_.size() - 1) + 1;
}

BigRational BernoulliTable::value_at(unsigned m) const {
  if (even_.empty() || m > max_index()) {
    throw TableError("Bernoulli table (" + method_name(method_) + ") covers indices <= " +
                     std::to_string(even_.empty() ? 0 : max_index()) +
                     ", requested B_" + std::to_string(m));
  }
  if (m == 1) return BigRational(-1, 2);
  if (m % 2 == 1) return BigRational(0);
  return even_[m / 2];
}

const BigRational& BernoulliTable::even_entry(unsigned n) const {
  if (n >= even_.size()) {
    throw TableError("Bernoulli table (" + method_name(method_) + ") holds " +
                     std::to_string(even_.size()) + " even entries, requested B_" +
                     std::to_string(2 * n));
  }
  return even_[n];
}

void BernoulliTable::extend_to(unsigned max_index) {
  const unsigned need = max_index / 2; // highest even position
  if (need < even_.size()) return;
  switch (method_) {
    case BernoulliMethod::Recurrence:
      extend_recurrence(max_index);
      break;
    case BernoulliMethod::AkiyamaTanigawa:
      extend_akiyama_tanigawa(max_index);
      break;
    default:
      throw Error("Bernoulli table method '" + method_name(method_) +
                  "' is filled by its producer, not extendable in place");
  }
}

void BernoulliTable::extend_recurrence(unsigned max_index) {
  // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k. Odd B_k >= 3 vanish, so only
  // even k and k = 1 contribute; odd targets are recomputed and checked
  // against zero rather than assumed.
  if (even_.empty()) {
    even_.push_back(BigRational(1)); // B_0
    charge_bignum_bits(bit_size(even_.back()));
  }
  const unsigned target = max_index + (max_index % 2);
  const unsigned start = 2 * static_cast<unsigned>(even_.size());
  for (unsigned m = start; m <= target + 1; ++m) {
    BigRational acc(0);
    for (unsigned k = 0; k + 1 < even_.size() * 2 && k < m; k += 2) {
      acc += BigRational(binomial(m + 1, static_cast<long>(k))) * even_[k / 2];
    }
    acc += BigRational(binomial(m + 1, 1)) * BigRational(-1, 2); // B_1 term
    BigRational value = -acc / BigRational(static_cast<long>(m) + 1);
    if (m % 2 == 1) {
      if (!value.is_zero()) {
        throw StructureError("recurrence produced nonzero odd Bernoulli B_" +
                             std::to_string(m) + " = " + value.str());
      }
      continue;
    }
    charge_bignum_bits(bit_size(value));
    even_.push_back(std::move(value));
  }
}

void BernoulliTable::extend_akiyama_tanigawa(unsigned max_index) {
  // The triangle wants its full initial row up front, so extension
  // recomputes and then checks the old prefix was reproduced exactly.
  const unsigned top = max_index + (max_index % 2);
  std::vector<BigRational> row;
  row.reserve(top + 1);
  for (unsigned j = 0; j <= top; ++j) row.emplace_back(1, static_cast<long>(j) + 1);

  std::vector<BigRational> fresh;
  fresh.reserve(top / 2 + 1);
  fresh.push_back(row[0]); // B_0 = 1
  for (unsigned i = 1; i <= top; ++i) {
    for (unsigned j = 0; j + i <= top; ++j) {
      row[j] = BigRational(static_cast<long>(j) + 1) * (row[j] - row[j + 1]);
    }
    if (i % 2 == 0) fresh.push_back(row[0]);
    // (odd rows give B_1 = +1/2 in this scheme; only evens are kept)
  }

  for (std::size_t n = 0; n < even_.size(); ++n) {
    if (!(fresh[n] == even_[n])) {
      throw StructureError("Akiyama-Tanigawa extension changed B_" + std::to_string(2 * n) +
                           ": had " + even_[n].str() + ", recomputed " + fresh[n].str());
    }
  }
  for (std::size_t n = even_.size(); n < fresh.size(); ++n) {
    charge_bignum_bits(bit_size(fresh[n]));
  }
  even_ = std::move(fresh);
}

BernoulliTable bernoulli_recurrence(unsigned max_index) {
  BernoulliTable t(BernoulliMethod::Recurrence);
  t.extend_to(max_index);
  return t;
}

BernoulliTable bernoulli_akiyama_tanigawa(unsigned max_index) {
  BernoulliTable t(BernoulliMethod::AkiyamaTanigawa);
  t.extend_to(max_index);
  return t;
}

BigRational divided_bernoulli(unsigned m, const BernoulliTable& table) {
  if (m == 0) throw Error("divided Bernoulli number beta_m needs m >= 1");
  return table.value_at(m) / BigRational(static_cast<long>(m));
}

ZetaEvenValue zeta_even_exact(unsigned n, const BernoulliTable& table) {
  if (n == 0) throw Error("zeta_even_exact needs n >= 1");
  // zeta(2n) = (2pi)^(2n) / (2 (2n)!) * |B_2n|  =>  coefficient 2^(2n-1) |B_2n| / (2n)!
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n - 1);
  BigRational coeff = BigRational(two_pow) * table.value_at(2 * n).abs() /
                      BigRational(factorial(2 * n));
  return ZetaEvenValue{2 * n, std::move(coeff)};
}

} // namespace bernmat
