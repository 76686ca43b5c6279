#include "bernmat/verify.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "bernmat/analytic.hpp"

namespace bernmat {

namespace {

std::string range_n(unsigned n) { return "n=" + std::to_string(n); }

VerifyOutcome ok(std::string name, std::string range, std::string detail = {}) {
  return VerifyOutcome{std::move(name), std::move(range), true, {}, std::move(detail)};
}

VerifyOutcome fail(std::string name, std::string range, std::string why,
                   std::string detail = {}) {
  return VerifyOutcome{std::move(name), std::move(range), false, std::move(why),
                       std::move(detail)};
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

SuiteResult verify_rid2(unsigned max_n, VerifyContext& ctx) {
  SuiteResult r{"rid2", {}, {}};
  ctx.oracle.extend_to(2 * max_n);
  for (unsigned n = 1; n <= max_n; ++n) {
    const BigRational res = rid2_residual(n, ctx.oracle);
    if (res == BigRational(1)) {
      r.outcomes.push_back(ok("rid2_residual", range_n(n)));
    } else {
      r.outcomes.push_back(fail("rid2_residual", range_n(n), "residual = " + res.str()));
    }
  }
  return r;
}

SuiteResult verify_rows(unsigned max_n, VerifyContext& ctx) {
  SuiteResult r{"rows", {}, {}};
  ctx.matrix.ensure(max_n);
  ctx.oracle.extend_to(2 * max_n);
  const TriangularMatrix& inv = ctx.matrix.inverse();
  for (unsigned n = 1; n <= max_n; ++n) {
    const int want_sign = n % 2 == 1 ? +1 : -1;

    bool sign_ok = true, monotone_ok = true;
    std::string sign_why, monotone_why;
    std::vector<BigRational> mags;
    for (unsigned k = 1; k <= n; ++k) {
      const BigRational& v = inv.at(n, k);
      if (v.is_zero()) continue;
      if (v.sign() != want_sign && sign_ok) {
        sign_ok = false;
        sign_why = "entry (" + std::to_string(n) + "," + std::to_string(k) + ") = " + v.str();
      }
      BigRational mag = v.abs();
      if (!mags.empty() && !(mags.back() > mag) && monotone_ok) {
        monotone_ok = false;
        monotone_why = "col " + std::to_string(k) + ": " + mags.back().str() +
                       " then " + mag.str();
      }
      mags.push_back(std::move(mag));
    }
    r.outcomes.push_back(sign_ok ? ok("row_sign", range_n(n))
                                 : fail("row_sign", range_n(n), sign_why));
    r.outcomes.push_back(monotone_ok ? ok("monotone_decrease", range_n(n))
                                     : fail("monotone_decrease", range_n(n), monotone_why));

    if (n >= 3) {
      const BigRational& first = inv.at(n, 1);
      r.outcomes.push_back(first.is_zero()
                               ? ok("column1_zero", range_n(n))
                               : fail("column1_zero", range_n(n), "Minv(n,1) = " + first.str()));
    }

    const std::size_t want_count = n <= 2 ? 1 : n - 1;
    r.outcomes.push_back(mags.size() == want_count
                             ? ok("term_count", range_n(n))
                             : fail("term_count", range_n(n),
                                    std::to_string(mags.size()) + " terms, expected " +
                                        std::to_string(want_count)));

    // Each term exceeds the subtotal of all smaller terms.
    bool dominance_ok = true;
    std::string dominance_why;
    BigRational tail(0);
    for (std::size_t i = mags.size(); i-- > 1;) {
      if (!(mags[i - 1] > tail + mags[i])) {
        dominance_ok = false;
        dominance_why = "term " + std::to_string(i - 1) + " = " + mags[i - 1].str() +
                        " <= subtotal " + (tail + mags[i]).str();
        break;
      }
      tail += mags[i];
    }
    r.outcomes.push_back(dominance_ok ? ok("dominance", range_n(n))
                                      : fail("dominance", range_n(n), dominance_why));

    if (n >= 3) {
      const BigRational ratio = inv.at(n, 3).abs() / inv.at(n, 2).abs();
      r.outcomes.push_back(ratio == BigRational(3, 7)
                               ? ok("ratio_3_7", range_n(n))
                               : fail("ratio_3_7", range_n(n), "ratio = " + ratio.str()));
    }

    // Row sums back to the oracle Bernoulli number.
    const BigRational row_sum = bernoulli_from_matrix(n, inv);
    const BigRational want = ctx.oracle.value_at(2 * n);
    r.outcomes.push_back(row_sum == want
                             ? ok("row_sum_bernoulli", range_n(n))
                             : fail("row_sum_bernoulli", range_n(n),
                                    row_sum.str() + " != " + want.str()));
  }
  return r;
}

SuiteResult verify_closed_forms(unsigned max_n, VerifyContext& ctx) {
  SuiteResult r{"closed_forms", {}, {}};
  ctx.matrix.ensure(max_n);
  const TriangularMatrix& inv = ctx.matrix.inverse();
  for (unsigned n = 1; n <= max_n; ++n) {
    const BigRational d = diag_closed_form(n);
    r.outcomes.push_back(d == inv.at(n, n).abs()
                             ? ok("diag_closed_form", range_n(n))
                             : fail("diag_closed_form", range_n(n),
                                    d.str() + " != |" + inv.at(n, n).str() + "|"));
    if (n >= 2) {
      const BigRational s1 = subdiag1_closed_form(n);
      r.outcomes.push_back(s1 == inv.at(n, n - 1).abs()
                               ? ok("subdiag1_closed_form", range_n(n))
                               : fail("subdiag1_closed_form", range_n(n),
                                      s1.str() + " != |" + inv.at(n, n - 1).str() + "|"));
    }
    if (n >= 3) {
      const BigRational s2 = subdiag2_closed_form(n);
      r.outcomes.push_back(s2 == inv.at(n, n - 2).abs()
                               ? ok("subdiag2_closed_form", range_n(n))
                               : fail("subdiag2_closed_form", range_n(n),
                                      s2.str() + " != |" + inv.at(n, n - 2).str() + "|"));
    }
  }

  // The tabulated low-order polynomials.
  const RationalPolynomial q0_want(std::vector<BigRational>{BigRational(1, 6)});
  const RationalPolynomial q1_want(std::vector<BigRational>{BigRational(-1, 45), BigRational(7, 360)});
  const RationalPolynomial q2_want(std::vector<BigRational>{
      BigRational(1, 315), BigRational(-89, 15120), BigRational(31, 15120)});
  const std::array<const RationalPolynomial*, 3> want{&q0_want, &q1_want, &q2_want};
  for (unsigned l = 0; l < 3; ++l) {
    const bool same = ctx.family.q(l) == *want[l];
    r.outcomes.push_back(same ? ok("q_tabulated", "l=" + std::to_string(l))
                              : fail("q_tabulated", "l=" + std::to_string(l),
                                     "coefficients differ from the tabulated polynomial"));
  }
  return r;
}

SuiteResult verify_qpoly(unsigned max_n, VerifyContext& ctx) {
  SuiteResult r{"qpoly", {}, {}};
  ctx.matrix.ensure(max_n);
  ctx.oracle.extend_to(2 * max_n);
  const TriangularMatrix& inv = ctx.matrix.inverse();

  for (unsigned n = 1; n <= max_n; ++n) {
    const BigRational got = b2n_from_q(n, ctx.family);
    const BigRational want = ctx.oracle.value_at(2 * n).abs();
    r.outcomes.push_back(got == want ? ok("b2n_from_q", range_n(n))
                                     : fail("b2n_from_q", range_n(n),
                                            got.str() + " != " + want.str()));
  }

  for (unsigned n = 2; n <= max_n; ++n) {
    bool all_ok = true;
    std::string why;
    for (unsigned k = 2; k <= n; ++k) {
      const BigRational t = term_from_q(n, k, ctx.family);
      if (!(t == inv.at(n, k).abs())) {
        all_ok = false;
        why = "k=" + std::to_string(k) + ": " + t.str() + " != |" + inv.at(n, k).str() + "|";
        break;
      }
    }
    r.outcomes.push_back(all_ok ? ok("term_from_q", range_n(n))
                                : fail("term_from_q", range_n(n), why));
  }

  const unsigned lmax = max_n >= 3 ? max_n - 3 : 0;
  for (unsigned l = 0; l <= lmax; ++l) {
    const auto& poly = ctx.family.q(l);
    const bool deg_ok = poly.degree() == static_cast<int>(l) &&
                        !poly.leading_coefficient().is_zero();
    r.outcomes.push_back(deg_ok ? ok("q_degree", "l=" + std::to_string(l))
                                : fail("q_degree", "l=" + std::to_string(l),
                                       "degree " + std::to_string(poly.degree())));
  }

  // Scalar-recursion oracle at sampled levels (quadratic per point).
  for (unsigned l = 0; l <= lmax; l = l < 8 ? l + 1 : l * 2) {
    bool pt_ok = true;
    std::string why;
    for (long n : {static_cast<long>(l) + 3, static_cast<long>(l) + 7}) {
      const BigRational direct = q_scalar_recursion(l, n);
      const BigRational via_poly = ctx.family.eval_exact(l, n);
      if (!(direct == via_poly)) {
        pt_ok = false;
        why = "q_" + std::to_string(l) + "(" + std::to_string(n) + "): " + via_poly.str() +
              " != scalar " + direct.str();
        break;
      }
    }
    r.outcomes.push_back(pt_ok ? ok("q_scalar_oracle", "l=" + std::to_string(l))
                               : fail("q_scalar_oracle", "l=" + std::to_string(l), why));
  }
  return r;
}

SuiteResult verify_rid1(long terms) {
  SuiteResult r{"rid1", {}, {}};
  const long top = std::max<long>(terms, 100);
  const std::array<long, 3> Ls{top / 100, top / 10, top};
  for (double x : {0.5, 1.5, 2.5}) {
    const ConvergenceReport rep = rid1_report(x, Ls);
    r.reports.push_back(rep);
    std::ostringstream detail;
    for (const auto& p : rep.points) {
      detail << "L=" << p.truncation << " err=" << fmt(p.abs_error) << "; ";
    }
    bool decays = true;
    for (std::size_t i = 0; i + 1 < rep.points.size(); ++i) {
      if (!(rep.points[i + 1].abs_error < rep.points[i].abs_error)) decays = false;
    }
    const std::string range = "x=" + fmt(x);
    r.outcomes.push_back(decays ? ok("rid1_decade_decay", range, detail.str())
                                : fail("rid1_decade_decay", range,
                                       "errors do not strictly decrease", detail.str()));
  }
  return r;
}

SuiteResult verify_hohum(unsigned max_n, long terms) {
  SuiteResult r{"hohum", {}, {}};
  // j_n carries its accuracy contract up to n = 40, and (2n+1)!! leaves
  // double range past n ~ 150; clamp the sweep to the supported window.
  max_n = std::max(1u, std::min(max_n, 40u));
  const long N = std::max<long>(terms, 10);
  const double pi = 3.14159265358979323846264338327950288;
  double err1 = 0.0;
  unsigned argmax = 1;
  double errmax = -1.0;
  for (unsigned n = 1; n <= max_n; ++n) {
    const std::array<long, 2> Ns{N, 2 * N};
    r.reports.push_back(hohum_report(n, n == 1 ? std::span<const long>(Ns)
                                               : std::span<const long>(Ns.data(), 1)));
    const double target = std::pow(pi, static_cast<double>(n)) / std::sqrt(2.0);
    const double err = std::fabs(hohum_partial(n, N) - target);
    if (n == 1) err1 = err;
    // The error-ordering claim concerns n = 1..6; past that the absolute
    // rounding floor grows with pi^n and would dominate the comparison.
    if (n <= 6 && err > errmax) {
      errmax = err;
      argmax = n;
    }
    const double tol = hohum_pinned_tolerance(n, N);
    r.outcomes.push_back(err <= tol
                             ? ok("hohum_error", range_n(n), "err=" + fmt(err))
                             : fail("hohum_error", range_n(n),
                                    "err " + fmt(err) + " > tol " + fmt(tol)));
  }
  if (max_n >= 2) {
    const unsigned top = std::min(max_n, 6u);
    r.outcomes.push_back(argmax == 1
                             ? ok("hohum_largest_at_n1", "n=1.." + std::to_string(top))
                             : fail("hohum_largest_at_n1", "n=1.." + std::to_string(top),
                                    "largest error at n=" + std::to_string(argmax)));
  }
  // O(1/N): doubling the truncation should at least shave a quarter.
  const double target1 = pi / std::sqrt(2.0);
  const double err2N = std::fabs(hohum_partial(1, 2 * N) - target1);
  r.outcomes.push_back(err2N <= 0.75 * err1
                           ? ok("hohum_halving", "n=1",
                                "err(N)=" + fmt(err1) + " err(2N)=" + fmt(err2N))
                           : fail("hohum_halving", "n=1",
                                  "err(2N)=" + fmt(err2N) + " > 0.75*err(N)=" + fmt(0.75 * err1)));
  return r;
}

SuiteResult verify_zeta(unsigned max_n, long terms, VerifyContext& ctx) {
  SuiteResult r{"zeta", {}, {}};
  // pi^(2n) and the exact coefficient both leave double range past n ~ 150.
  max_n = std::max(1u, std::min(max_n, 150u));
  const long K = std::max<long>(terms, 10);
  ctx.oracle.extend_to(2 * max_n);
  const double pi = 3.14159265358979323846264338327950288;
  for (unsigned n = 1; n <= max_n; ++n) {
    const double exact = zeta_even_exact(n, ctx.oracle).pi_coefficient.to_double() *
                         std::pow(pi, 2.0 * n);
    const double partial = zeta_partial(2 * n, K);
    const double err = std::fabs(exact - partial);
    // Integral tail bound K^(1-2n)/(2n-1) with 10% slack, plus a float floor.
    const double tol =
        1.1 * std::pow(static_cast<double>(K), 1.0 - 2.0 * n) / (2.0 * n - 1.0) + 1e-12;
    r.outcomes.push_back(err <= tol ? ok("zeta_bridge", range_n(n), "err=" + fmt(err))
                                    : fail("zeta_bridge", range_n(n),
                                           "err " + fmt(err) + " > tol " + fmt(tol)));
  }
  return r;
}

} // namespace

Suite parse_suite(std::string_view name) {
  if (name == "rid2") return Suite::Rid2;
  if (name == "rows") return Suite::Rows;
  if (name == "closed_forms") return Suite::ClosedForms;
  if (name == "qpoly") return Suite::QPoly;
  if (name == "rid1") return Suite::Rid1;
  if (name == "hohum") return Suite::HoHum;
  if (name == "zeta") return Suite::Zeta;
  throw Error("unknown suite '" + std::string(name) +
              "' (expected rid2|rows|closed_forms|qpoly|rid1|hohum|zeta|all)");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Rid2: return "rid2";
    case Suite::Rows: return "rows";
    case Suite::ClosedForms: return "closed_forms";
    case Suite::QPoly: return "qpoly";
    case Suite::Rid1: return "rid1";
    case Suite::HoHum: return "hohum";
    case Suite::Zeta: return "zeta";
  }
  return "?";
}

double hohum_pinned_tolerance(unsigned n, long N) {
  // Measured at N = 1e5: 1.35e-5 at n = 1, <= 2.3e-13 for n = 2..6. The n = 1
  // pin scales with the O(1/N) truncation law. For n >= 2 the envelope
  // combines a rounding floor that tracks the target's magnitude with a
  // truncation tail that scales like N^-3 (the slowest case, n = 2, 3) and a
  // (2n+1)!!-weighted constant, capped so it stays finite for large n.
  if (n == 1) return 2.7e-5 * (1e5 / static_cast<double>(N));
  const double pi = 3.14159265358979323846;
  const double target = std::pow(pi, static_cast<double>(n)) / std::sqrt(2.0);
  double dfact = 1.0;
  for (unsigned i = 3; i <= 2 * std::min(n, 8u) + 1; i += 2) dfact *= i;
  const double truncation = dfact * 4.0 / (static_cast<double>(N) * N * N);
  return 1e-12 * target + truncation + 1e-13;
}

SuiteResult run_suite(Suite s, unsigned max_n, long terms, VerifyContext& ctx) {
  if (terms <= 0) {
    terms = s == Suite::Rid1 ? 10000 : s == Suite::HoHum ? 100000 : 1000000;
  }
  switch (s) {
    case Suite::Rid2: return verify_rid2(max_n, ctx);
    case Suite::Rows: return verify_rows(max_n, ctx);
    case Suite::ClosedForms: return verify_closed_forms(max_n, ctx);
    case Suite::QPoly: return verify_qpoly(max_n, ctx);
    case Suite::Rid1: return verify_rid1(terms);
    case Suite::HoHum: return verify_hohum(max_n, terms);
    case Suite::Zeta: return verify_zeta(max_n, terms, ctx);
  }
  throw Error("unhandled suite");
}

} // namespace bernmat
