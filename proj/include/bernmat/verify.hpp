#ifndef BERNMAT_VERIFY_HPP
#define BERNMAT_VERIFY_HPP

#include <string>
#include <vector>

#include "bernmat/analytic.hpp"
#include "bernmat/bernoulli.hpp"
#include "bernmat/matrix.hpp"
#include "bernmat/qpoly.hpp"

namespace bernmat {

/// One named check over a stated range. passed == true iff first_failure
/// is empty; detail carries measurements worth keeping even on success.
struct VerifyOutcome {
  std::string check_name;
  std::string range;
  bool passed = true;
  std::string first_failure;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<VerifyOutcome> outcomes;
  /// Partial-sum measurements (rid1/hohum suites only); rendered by the CLI
  /// as CSV columns L, value, abs_error, or embedded in the JSON report.
  std::vector<ConvergenceReport> reports;
  bool passed() const {
    for (const auto& o : outcomes)
      if (!o.passed) return false;
    return true;
  }
};

enum class Suite { Rid2, Rows, ClosedForms, QPoly, Rid1, HoHum, Zeta };

/// "rid2" | "rows" | "closed_forms" | "qpoly" | "rid1" | "hohum" | "zeta";
/// throws Error otherwise ("all" is expanded by the caller).
Suite parse_suite(std::string_view name);
std::string suite_name(Suite s);

/// Shared exact state so one invocation never rebuilds a table twice.
struct VerifyContext {
  BernoulliTable oracle{BernoulliMethod::Recurrence};
  MatrixInverseCache matrix;
  QPolynomialFamily family;
};

/// Runs one suite; exact suites use max_n, numeric suites use terms.
SuiteResult run_suite(Suite s, unsigned max_n, long terms, VerifyContext& ctx);

/// Measured-and-pinned truncation-error bound for hohum_partial(n, N)
/// (2x slack over the recorded measurement at N = 1e5, scaled by the
/// footnote's O(1/N) for n = 1).
double hohum_pinned_tolerance(unsigned n, long N);

} // namespace bernmat

#endif // BERNMAT_VERIFY_HPP
