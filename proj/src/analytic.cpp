#include "bernmat/analytic.hpp"

#include <cmath>

namespace bernmat {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

/// Kahan compensated accumulator.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

double dbl_factorial_odd(unsigned n) {
  // (2n+1)!!
  double r = 1.0;
  for (unsigned i = 3; i <= 2 * n + 1; i += 2) r *= static_cast<double>(i);
  return r;
}

} // namespace

double sinc(double z) {
  const double az = std::fabs(z);
  if (az < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

double spherical_bessel_j(unsigned n, double z) {
  if (!(z > 0.0)) {
    throw Error("spherical_bessel_j needs z > 0, got z = " + std::to_string(z));
  }
  if (n == 0) return sinc(z);
  const double j0 = sinc(z);
  const double j1 = std::sin(z) / (z * z) - std::cos(z) / z;
  if (n == 1) return j1;
  if (static_cast<double>(n) < z) {
    double jm = j0, jc = j1;
    for (unsigned k = 1; k < n; ++k) {
      const double jn = (2.0 * k + 1.0) / z * jc - jm;
      jm = jc;
      jc = jn;
    }
    return jc;
  }
  // Ascending series: j_n(z) = sum_{k>=0} (-1)^k z^(n+2k) / (2^k k! (2n+2k+1)!!)
  double term = 1.0;
  for (unsigned i = 1; i <= n; ++i) term *= z / (2.0 * i + 1.0); // z^n/(2n+1)!!
  double sum = term;
  for (unsigned k = 1; k < 400; ++k) {
    term *= -(z * z) / (2.0 * k * (2.0 * n + 2.0 * k + 1.0));
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

double rid1_partial(double x, long L) {
  if (L < 1) throw Error("rid1_partial needs L >= 1");
  Kahan acc;
  for (long l = 1; l <= L; ++l) {
    const double r = std::sqrt(static_cast<double>(l) * l + x * x);
    const double term = sinc(kPi * r);
    acc.add(l % 2 == 0 ? term : -term);
  }
  return sinc(kPi * x) + 2.0 * acc.sum;
}

double hohum_partial(unsigned n, long N) {
  if (n < 1 || N < 1) throw Error("hohum_partial needs n >= 1 and N >= 1");
  const double sqrt2 = std::sqrt(2.0);
  Kahan acc;
  for (long l = 1; l <= N; ++l) {
    const double term = sqrt2 * spherical_bessel_j(n, kPi * l) /
                        std::pow(static_cast<double>(l), static_cast<double>(n));
    acc.add(l % 2 == 0 ? term : -term);
  }
  return -dbl_factorial_odd(n) * acc.sum;
}

double bessel_sum_closed_form(unsigned n, const BernoulliTable& table) {
  if (n < 1) throw Error("bessel_sum_closed_form needs n >= 1");
  const unsigned h = n / 2;          // floor(n/2)
  const unsigned kmax = (n - 1) / 2; // floor((n-1)/2)
  const double sqrt2 = std::sqrt(2.0);
  Kahan acc;
  for (unsigned k = 0; k <= kmax; ++k) {
    const double zeta = zeta_even_exact(k + h + 1, table).pi_coefficient.to_double() *
                        std::pow(kPi, 2.0 * (k + h + 1));
    double term;
    if (n % 2 == 0) {
      const long gamma_arg = 2 * static_cast<long>(h) - 2 * static_cast<long>(k);
      if (gamma_arg <= 0) continue; // 1/Gamma(nonpositive integer) = 0
      term = sqrt2 * factorial(2 * h + 2 * k + 1).get_d() /
             (factorial(2 * k + 1).get_d() * factorial(static_cast<unsigned>(gamma_arg) - 1).get_d()) *
             zeta / (std::pow(2.0, 2.0 * k + 1.0) * std::pow(kPi, 2.0 * k + 2.0));
    } else {
      const long gamma_arg = 2 * static_cast<long>(h) + 2 - 2 * static_cast<long>(k);
      if (gamma_arg <= 0) continue;
      term = sqrt2 * factorial(2 * h + 2 * k + 1).get_d() /
             (factorial(2 * k).get_d() * factorial(static_cast<unsigned>(gamma_arg) - 1).get_d()) *
             zeta / (std::pow(2.0, 2.0 * k) * std::pow(kPi, 2.0 * k + 1.0));
    }
    acc.add(k % 2 == 0 ? term : -term);
  }
  const bool flip = (h % 2 == 1) != (n % 2 == 1); // (-1)^h, extra -1 for odd n
  return flip ? -acc.sum : acc.sum;
}

double zeta_partial(unsigned s, long K) {
  if (s < 2 || s % 2 != 0) throw Error("zeta_partial needs even s >= 2");
  if (K < 1) throw Error("zeta_partial needs K >= 1");
  Kahan acc;
  for (long k = 1; k <= K; ++k) {
    acc.add(std::pow(static_cast<double>(k), -static_cast<double>(s)));
  }
  return acc.sum;
}

double cross_section(double mass, double kappa, double k, double hbar) {
  if (!(mass > 0.0) || !(kappa > 0.0) || !(k > 0.0) || !(hbar > 0.0)) {
    throw Error("cross_section needs positive inputs (mass=" + std::to_string(mass) +
                ", kappa=" + std::to_string(kappa) + ", k=" + std::to_string(k) +
                ", hbar=" + std::to_string(hbar) + ")");
  }
  return 2.0 * kPi * kPi * mass * kappa / (hbar * hbar * k);
}

ConvergenceReport rid1_report(double x, std::span<const long> truncations) {
  ConvergenceReport r{"rid1", x, 1.0, {}};
  for (long L : truncations) {
    const double v = rid1_partial(x, L);
    r.points.push_back({L, v, std::fabs(v - 1.0)});
  }
  return r;
}

ConvergenceReport hohum_report(unsigned n, std::span<const long> truncations) {
  const double target = std::pow(kPi, static_cast<double>(n)) / std::sqrt(2.0);
  ConvergenceReport r{"hohum", static_cast<double>(n), target, {}};
  for (long N : truncations) {
    const double v = hohum_partial(n, N);
    r.points.push_back({N, v, std::fabs(v - target)});
  }
  return r;
}

} // namespace bernmat
