#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernmat/analytic.hpp"
#include "bernmat/bernoulli.hpp"
#include "bernmat/export.hpp"
#include "bernmat/matrix.hpp"
#include "bernmat/qpoly.hpp"
#include "bernmat/verify.hpp"

namespace {

using namespace bernmat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

BigRational bernoulli_by_method(unsigned n, BernoulliMethod method) {
  switch (method) {
    case BernoulliMethod::Recurrence:
      return bernoulli_recurrence(2 * n).value_at(2 * n);
    case BernoulliMethod::AkiyamaTanigawa:
      return bernoulli_akiyama_tanigawa(2 * n).value_at(2 * n);
    case BernoulliMethod::MatrixInverse: {
      MatrixInverseCache cache;
      cache.ensure(n);
      return bernoulli_from_matrix(n, cache.inverse());
    }
    case BernoulliMethod::QPolynomial: {
      QPolynomialFamily family;
      BigRational mag = b2n_from_q(n, family);
      return n % 2 == 1 ? mag : -mag;
    }
  }
  throw Error("unhandled method");
}

BernoulliMethod parse_method(const std::string& name) {
  if (name == "recurrence") return BernoulliMethod::Recurrence;
  if (name == "akiyama") return BernoulliMethod::AkiyamaTanigawa;
  if (name == "matrix") return BernoulliMethod::MatrixInverse;
  if (name == "qpoly") return BernoulliMethod::QPolynomial;
  throw CLI::ValidationError("--method", "expected recurrence|akiyama|matrix|qpoly");
}

int cmd_bernoulli(unsigned n, const std::string& method_str, OutputFormat format) {
  const BernoulliMethod method = parse_method(method_str);
  const BigRational value = bernoulli_by_method(n, method);
  switch (format) {
    case OutputFormat::Plain:
      std::cout << "B_" << 2 * n << " = " << value.str() << " ~ " << value.to_double()
                << "  (method: " << method_name(method) << ")\n";
      break;
    case OutputFormat::Json: {
      json doc{{"command", "bernoulli"}, {"n", n},      {"index", 2 * n},
               {"method", method_name(method)},         {"value", value.str()},
               {"approx", value.to_double()}};
      std::cout << doc.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      std::cout << "n,index,method,value,approx\n"
                << n << ',' << 2 * n << ',' << method_name(method) << ',' << value.str()
                << ',' << value.to_double() << "\n";
      break;
  }
  return kExitOk;
}

int cmd_decompose(unsigned n, OutputFormat format) {
  MatrixInverseCache cache;
  cache.ensure(n);
  const DecompositionRow row = decomposition_row(n, cache.inverse());

  std::vector<BigRational> subtotals;
  BigRational running(0);
  for (const auto& t : row.terms) {
    running += t;
    subtotals.push_back(running);
  }
  bool dominance = true;
  BigRational tail(0);
  for (std::size_t i = row.terms.size(); i-- > 1;) {
    if (!(row.terms[i - 1] > tail + row.terms[i])) dominance = false;
    tail += row.terms[i];
  }
  const bool has_ratio = row.terms.size() >= 2;
  const bool ratio37 = has_ratio && row.terms[1] / row.terms[0] == BigRational(3, 7);

  switch (format) {
    case OutputFormat::Plain: {
      std::cout << "|B_" << 2 * n << "| = " << running.str() << "  (sign "
                << (row.sign > 0 ? "+" : "-") << ", " << row.terms.size() << " terms)\n";
      for (std::size_t i = 0; i < row.terms.size(); ++i) {
        std::cout << "  term " << i + 1 << ": " << row.terms[i].str()
                  << "   subtotal: " << subtotals[i].str() << "\n";
      }
      std::cout << "  dominance: " << (dominance ? "holds" : "VIOLATED")
                << "   second/first = 3/7: "
                << (has_ratio ? (ratio37 ? "holds" : "VIOLATED") : "n/a") << "\n";
      break;
    }
    case OutputFormat::Json: {
      json jterms = json::array(), jsub = json::array();
      for (const auto& t : row.terms) jterms.push_back(t.str());
      for (const auto& s : subtotals) jsub.push_back(s.str());
      json doc{{"command", "decompose"},
               {"n", n},
               {"index", 2 * n},
               {"sign", row.sign},
               {"terms", jterms},
               {"subtotals", jsub},
               {"total", running.str()},
               {"dominance_holds", dominance},
               {"ratio_3_7_holds", has_ratio ? json(ratio37) : json(nullptr)}};
      std::cout << doc.dump() << "\n";
      break;
    }
    case OutputFormat::Csv: {
      std::cout << "n,position,term,subtotal\n";
      for (std::size_t i = 0; i < row.terms.size(); ++i) {
        std::cout << n << ',' << i + 1 << ',' << row.terms[i].str() << ','
                  << subtotals[i].str() << "\n";
      }
      break;
    }
  }
  return dominance && (!has_ratio || ratio37) ? kExitOk : kExitCheckFailed;
}

void print_suite(const SuiteResult& result, OutputFormat format, json& jdoc,
                 bool csv_report_schema) {
  switch (format) {
    case OutputFormat::Plain: {
      std::size_t passed = 0;
      for (const auto& o : result.outcomes)
        if (o.passed) ++passed;
      std::cout << "suite " << result.suite << ": " << passed << "/" << result.outcomes.size()
                << " checks passed\n";
      for (const auto& o : result.outcomes) {
        if (!o.passed) {
          std::cout << "  FAIL " << o.check_name << " [" << o.range << "]: " << o.first_failure
                    << "\n";
        }
      }
      break;
    }
    case OutputFormat::Json: {
      json checks = json::array();
      for (const auto& o : result.outcomes) {
        json c{{"name", o.check_name}, {"range", o.range}, {"passed", o.passed}};
        if (!o.first_failure.empty()) c["failure"] = o.first_failure;
        if (!o.detail.empty()) c["detail"] = o.detail;
        checks.push_back(std::move(c));
      }
      json entry{{"suite", result.suite}, {"passed", result.passed()}, {"checks", checks}};
      if (!result.reports.empty()) {
        json reports = json::array();
        for (const auto& rep : result.reports) {
          json points = json::array();
          for (const auto& p : rep.points) {
            points.push_back({{"L", p.truncation}, {"value", p.value},
                              {"abs_error", p.abs_error}});
          }
          reports.push_back({{"identity", rep.identity}, {"parameter", rep.parameter},
                             {"target", rep.target}, {"points", points}});
        }
        entry["reports"] = std::move(reports);
      }
      jdoc["suites"].push_back(std::move(entry));
      break;
    }
    case OutputFormat::Csv: {
      if (csv_report_schema) {
        for (const auto& rep : result.reports) {
          for (const auto& p : rep.points) {
            std::cout << rep.identity << ',' << rep.parameter << ',' << p.truncation << ','
                      << p.value << ',' << p.abs_error << "\n";
          }
        }
      } else {
        for (const auto& o : result.outcomes) {
          std::cout << result.suite << ',' << o.check_name << ',' << o.range << ','
                    << (o.passed ? "pass" : "fail") << ',' << o.first_failure << ','
                    << o.detail << "\n";
        }
      }
      break;
    }
  }
}

int cmd_verify(const std::string& suite_str, unsigned max_n, long terms, OutputFormat format) {
  std::vector<Suite> suites;
  if (suite_str == "all") {
    suites = {Suite::Rid2, Suite::Rows,  Suite::ClosedForms, Suite::QPoly,
              Suite::Rid1, Suite::HoHum, Suite::Zeta};
  } else {
    suites = {parse_suite(suite_str)};
  }

  VerifyContext ctx;
  bool all_passed = true;
  json jdoc{{"command", "verify"}, {"max_n", max_n}, {"terms", terms}, {"suites", json::array()}};
  // A single rid1/hohum suite in CSV mode renders its convergence study
  // directly (columns L, value, abs_error); everything else renders checks.
  const bool csv_report_schema =
      suites.size() == 1 && (suites[0] == Suite::Rid1 || suites[0] == Suite::HoHum);
  if (format == OutputFormat::Csv) {
    std::cout << (csv_report_schema ? "identity,parameter,L,value,abs_error\n"
                                    : "suite,check,range,result,failure,detail\n");
  }
  for (Suite s : suites) {
    // Numeric suites clamp their own defaults; hohum and zeta cap at their
    // standard ranges when running under "all".
    unsigned n_for_suite = max_n;
    if (s == Suite::HoHum && suite_str == "all") n_for_suite = std::min(max_n, 6u);
    if (s == Suite::Zeta && suite_str == "all") n_for_suite = std::min(max_n, 10u);
    const SuiteResult result = run_suite(s, n_for_suite, terms, ctx);
    all_passed = all_passed && result.passed();
    print_suite(result, format, jdoc, csv_report_schema);
  }
  if (format == OutputFormat::Json) {
    jdoc["passed"] = all_passed;
    std::cout << jdoc.dump() << "\n";
  } else if (format == OutputFormat::Plain) {
    std::cout << (all_passed ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_export(const std::string& what, unsigned rows, OutputFormat format,
               const std::string& out_path) {
  Triangle t;
  bool poly_schema = false;
  if (what == "m") {
    t = m_triangle(rows);
  } else if (what == "minv" || what == "terms") {
    MatrixInverseCache cache;
    cache.ensure(rows);
    t = what == "minv" ? minv_triangle(cache.inverse(), rows)
                       : terms_triangle(cache.inverse(), rows);
  } else if (what == "qcoeffs") {
    QPolynomialFamily family;
    t = qcoeffs_triangle(family, rows);
    poly_schema = true;
  } else {
    throw CLI::ValidationError("what", "expected m|minv|terms|qcoeffs");
  }

  std::string rendered;
  switch (format) {
    case OutputFormat::Json: rendered = triangle_to_json(t) + "\n"; break;
    case OutputFormat::Csv: rendered = triangle_to_csv(t, poly_schema); break;
    case OutputFormat::Plain: rendered = triangle_to_plain(t); break;
  }

  if (out_path.empty() || out_path == "-") {
    std::cout << rendered;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  out << rendered;
  out.close();
  if (!out) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_bench(unsigned max_n, std::vector<std::string> method_strs, OutputFormat format) {
  if (method_strs.empty()) method_strs = {"recurrence", "akiyama", "matrix", "qpoly"};
  struct Row {
    std::string method;
    double seconds;
    std::vector<BigRational> values;
  };
  std::vector<Row> rowset;
  for (const auto& ms : method_strs) {
    const BernoulliMethod method = parse_method(ms);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<BigRational> values;
    values.reserve(max_n);
    switch (method) {
      case BernoulliMethod::Recurrence: {
        const BernoulliTable t = bernoulli_recurrence(2 * max_n);
        for (unsigned n = 1; n <= max_n; ++n) values.push_back(t.value_at(2 * n));
        break;
      }
      case BernoulliMethod::AkiyamaTanigawa: {
        const BernoulliTable t = bernoulli_akiyama_tanigawa(2 * max_n);
        for (unsigned n = 1; n <= max_n; ++n) values.push_back(t.value_at(2 * n));
        break;
      }
      case BernoulliMethod::MatrixInverse: {
        MatrixInverseCache cache;
        cache.ensure(max_n);
        for (unsigned n = 1; n <= max_n; ++n)
          values.push_back(bernoulli_from_matrix(n, cache.inverse()));
        break;
      }
      case BernoulliMethod::QPolynomial: {
        QPolynomialFamily family;
        for (unsigned n = 1; n <= max_n; ++n) {
          BigRational mag = b2n_from_q(n, family);
          values.push_back(n % 2 == 1 ? mag : -mag);
        }
        break;
      }
    }
    const auto t1 = std::chrono::steady_clock::now();
    rowset.push_back({method_name(method), std::chrono::duration<double>(t1 - t0).count(),
                      std::move(values)});
  }

  // Timings are only meaningful if every method computed the same numbers.
  bool equal = true;
  std::string mismatch;
  for (std::size_t i = 1; i < rowset.size(); ++i) {
    for (unsigned n = 1; n <= max_n; ++n) {
      if (!(rowset[i].values[n - 1] == rowset[0].values[n - 1])) {
        equal = false;
        mismatch = "B_" + std::to_string(2 * n) + ": " + rowset[i].method + " gives " +
                   rowset[i].values[n - 1].str() + ", " + rowset[0].method + " gives " +
                   rowset[0].values[n - 1].str();
        break;
      }
    }
  }
  if (!equal) {
    std::cerr << "error: methods disagree before timing: " << mismatch << "\n";
    return kExitCheckFailed;
  }

  switch (format) {
    case OutputFormat::Plain:
      std::cout << "all methods agree on B_2..B_" << 2 * max_n << "\n";
      for (const auto& r : rowset) {
        std::cout << "  " << r.method << ": " << r.seconds << " s\n";
      }
      break;
    case OutputFormat::Json: {
      json jrows = json::array();
      for (const auto& r : rowset) jrows.push_back({{"method", r.method}, {"seconds", r.seconds}});
      std::cout << json{{"command", "bench"}, {"max_n", max_n}, {"equal", true}, {"timings", jrows}}
                       .dump()
                << "\n";
      break;
    }
    case OutputFormat::Csv:
      std::cout << "method,max_n,seconds,equal\n";
      for (const auto& r : rowset) {
        std::cout << r.method << ',' << max_n << ',' << r.seconds << ",true\n";
      }
      break;
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bernoulli-number engine: the triangular identity 1 = M*B, its inverse,\n"
               "monotone decompositions of |B_2n|, q_l(n) polynomials, and floating-point\n"
               "verification of the sinc/Bessel identities behind them."};
  app.require_subcommand(1);

  std::string format_str = "plain";
  app.add_option("--format", format_str, "Output format: plain|json|csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  unsigned n = 1;
  unsigned max_n = 100;
  long terms = 0;
  std::string method = "recurrence";
  std::string suite = "all";
  std::string what;
  std::string out_path;
  std::vector<std::string> bench_methods;

  auto* c_bern = app.add_subcommand("bernoulli", "Print B_2n exactly (plus float approximation)");
  c_bern->fallthrough();
  c_bern->add_option("--n", n, "Row index; prints B_{2n}")->required()->check(CLI::PositiveNumber);
  c_bern->add_option("--method", method, "recurrence|akiyama|matrix|qpoly")
      ->capture_default_str()
      ->check(CLI::IsMember({"recurrence", "akiyama", "matrix", "qpoly"}));

  auto* c_dec = app.add_subcommand("decompose", "Print the monotone decomposition of |B_2n|");
  c_dec->fallthrough();
  c_dec->add_option("--n", n, "Row index")->required()->check(CLI::PositiveNumber);

  auto* c_ver = app.add_subcommand("verify", "Run identity/property suites");
  c_ver->fallthrough();
  c_ver->add_option("suite", suite, "rid2|rows|closed_forms|qpoly|rid1|hohum|zeta|all")
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"rid2", "rows", "closed_forms", "qpoly", "rid1", "hohum", "zeta", "all"}));
  c_ver->add_option("--max-n", max_n, "Exact-suite range bound")->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_ver->add_option("--terms", terms, "Truncation for numeric suites (0 = suite default)")
      ->check(CLI::NonNegativeNumber);

  auto* c_exp = app.add_subcommand("export", "Write a triangle (M, M^-1, terms, q coefficients)");
  c_exp->fallthrough();
  c_exp->add_option("what", what, "m|minv|terms|qcoeffs")
      ->required()
      ->check(CLI::IsMember({"m", "minv", "terms", "qcoeffs"}));
  c_exp->add_option("--n,--rows", n, "Number of rows")->required()->check(CLI::PositiveNumber);
  c_exp->add_option("--out", out_path, "Output path (default stdout)");

  auto* c_bench = app.add_subcommand("bench", "Time the Bernoulli methods against each other");
  c_bench->fallthrough();
  c_bench->add_option("--max-n", max_n, "Compute B_2..B_{2 max_n}")->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_bench->add_option("--method", bench_methods, "Method subset (repeatable; default all)")
      ->check(CLI::IsMember({"recurrence", "akiyama", "matrix", "qpoly"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (const char* cap = std::getenv("BERNMAT_MAX_BITS")) {
    char* end = nullptr;
    const unsigned long long bits = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || bits == 0) {
      std::cerr << "error: BERNMAT_MAX_BITS must be a positive integer, got '" << cap << "'\n";
      return kExitUsage;
    }
    bernmat::set_bignum_bit_budget(bits);
  }

  try {
    const OutputFormat format = parse_format(format_str);
    if (c_bern->parsed()) return cmd_bernoulli(n, method, format);
    if (c_dec->parsed()) return cmd_decompose(n, format);
    if (c_ver->parsed()) return cmd_verify(suite, max_n, terms, format);
    if (c_exp->parsed()) return cmd_export(what, n, format, out_path);
    if (c_bench->parsed()) return cmd_bench(max_n, bench_methods, format);
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bernmat::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const bernmat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
