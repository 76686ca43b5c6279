#ifndef BERNMAT_ANALYTIC_HPP
#define BERNMAT_ANALYTIC_HPP

#include <span>
#include <string>
#include <vector>

#include "bernmat/bernoulli.hpp"

namespace bernmat {

/// sin(z)/z with the removable singularity handled by the even Taylor series
/// 1 - z^2/6 + z^4/120 for small |z|.
double sinc(double z);

/// Spherical Bessel function j_n(z) for z > 0. Upward recurrence from
/// j_0, j_1 when n < z; ascending power series otherwise (the recurrence is
/// unstable only when n exceeds z). Near machine precision for n <= 40, z >= 1.
double spherical_bessel_j(unsigned n, double z);

/// Truncated right-hand side of
///   1 = sinc(pi x) + 2 sum_{l=1}^{L} (-1)^l sinc(pi sqrt(l^2 + x^2)).
double rid1_partial(double x, long L);

/// Truncated right-hand side of
///   pi^n/sqrt(2) = -(2n+1)!! sum_{l=1}^{N} (-1)^l sqrt(2) j_n(pi l) / l^n,
/// using J_{n+1/2}(pi l) = sqrt(2 l) j_n(pi l). Compensated summation in
/// index order (the n = 1 sum converges conditionally).
double hohum_partial(unsigned n, long N);

/// The closed-form value of sum_l (-1)^l J_{n+1/2}(l pi)/l^{n+1/2}: a finite
/// sum over k of zeta(2k + 2 floor(n/2) + 2) with factorial and power-of-pi
/// weights, split into even/odd n cases. Zeta values are taken exactly from
/// the Bernoulli table and then converted to float. A term whose Gamma
/// argument is a non-positive integer contributes zero.
double bessel_sum_closed_form(unsigned n, const BernoulliTable& table);

/// sum_{k=1}^{K} k^(-s) for even s >= 2, compensated.
double zeta_partial(unsigned s, long K);

/// sigma = 2 pi^2 m kappa / (hbar^2 k); all inputs must be positive.
double cross_section(double mass, double kappa, double k, double hbar);

/// One truncation level of a partial-sum study.
struct ConvergencePoint {
  long truncation;
  double value;
  double abs_error; // |value - target|
};

/// Partial sums of one identity at increasing truncations, against the
/// stated target.
struct ConvergenceReport {
  std::string identity;
  double parameter; // x for rid1, n for hohum
  double target;
  std::vector<ConvergencePoint> points; // ascending truncation
};

ConvergenceReport rid1_report(double x, std::span<const long> truncations);
ConvergenceReport hohum_report(unsigned n, std::span<const long> truncations);

} // namespace bernmat

#endif // BERNMAT_ANALYTIC_HPP
