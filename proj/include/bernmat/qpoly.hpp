#ifndef BERNMAT_QPOLY_HPP
#define BERNMAT_QPOLY_HPP

#include <vector>

#include "bernmat/polynomial.hpp"
#include "bernmat/rational.hpp"

namespace bernmat {

/// The degree-l polynomials q_l(n) generated sequentially from
///
///   q_l(n) = (-1)^l (n-l-3)! / [(2l+3)! (n-2l-3)!]
///          + sum_{j=0}^{l-1} (-1)^(l+j+1) (n-l-1+j)! / [(2l+1-2j)! (n-2l-1+2j)!] q_j(n+j-l)
///
/// with each factorial ratio expanded as a falling product of consecutive
/// linear factors and q_j taken at the shifted argument. Computed on demand,
/// memoized; computing q_l forces q_0..q_{l-1}.
///
/// Internally each level is carried in the shifted variable s = n-l (where
/// q_j(n+j-l) is exactly the previous level's stored polynomial) with integer
/// coefficient vectors over a single denominator, so one level costs O(l^2)
/// integer operations instead of O(l^3) rational ones. The result is the
/// identical exact polynomial; tests pin this against the direct
/// falling-product/poly_shift construction and the tabulated q_0..q_2.
class QPolynomialFamily {
public:
  QPolynomialFamily() = default;

  /// Number of polynomials built so far (q_0..q_{count-1}).
  unsigned computed_count() const { return static_cast<unsigned>(polys_.size()); }

  /// q_l as an exact coefficient polynomial; builds what is missing.
  const RationalPolynomial& q(unsigned l);

  /// q_l(n) for integer n, evaluated exactly without re-expanding coefficients.
  BigRational eval_exact(unsigned l, long n);

private:
  struct ScaledPoly {
    std::vector<BigInt> num; // ascending powers of s = n - l
    BigInt den;              // > 0
  };

  void build_next_level();

  std::vector<RationalPolynomial> polys_; // q_l in the n variable
  std::vector<ScaledPoly> shifted_;       // Q_l(s) = q_l(s + l)
  std::vector<ScaledPoly> products_;      // running falling-product * Q_j caches
  std::vector<BigInt> first_fall_;        // (s-3)(s-4)...(s-l-2) for the next level
};

/// Free-function wrappers over the family.
const RationalPolynomial& q_polynomial(unsigned l, QPolynomialFamily& family);

/// k-th term of the |B_{2n}| decomposition: n! q_{n-k-1}(n) k!(k-1)/(2k+1)!
/// for 2 <= k <= n-1, and (n!)^2/(2n+1)! for k = n. Equals |Minv(n, k)|.
BigRational term_from_q(unsigned n, unsigned k, QPolynomialFamily& family);

/// |B_{2n}| reconstructed from the q polynomials (diagonal term plus the
/// k = 2..n-1 sum; empty sum for n <= 2).
BigRational b2n_from_q(unsigned n, QPolynomialFamily& family);

/// q_l(n) for one integer point n >= l+3, recomputed scalar-by-scalar from
/// the recursion (the needed q_j values all lie on the diagonal q_j(n-l+j),
/// so a single sweep suffices). No polynomial algebra; serves as an
/// independent consistency oracle for the family.
BigRational q_scalar_recursion(unsigned l, long n);

} // namespace bernmat

#endif // BERNMAT_QPOLY_HPP
