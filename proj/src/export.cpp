#include "bernmat/export.hpp"

#include <sstream>

#include <json.hpp>

namespace bernmat {

OutputFormat parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw Error("unknown format '" + std::string(name) + "' (expected plain|json|csv)");
}

Triangle m_triangle(unsigned rows) {
  Triangle t;
  t.reserve(rows);
  for (unsigned m = 1; m <= rows; ++m) {
    std::vector<BigRational> row;
    row.reserve(m);
    for (unsigned n = 1; n <= m; ++n) row.push_back(m_entry(m, n));
    t.push_back(std::move(row));
  }
  return t;
}

Triangle minv_triangle(const TriangularMatrix& minv, unsigned rows) {
  if (rows > minv.size()) {
    throw TableError("minv_triangle: inverse has " + std::to_string(minv.size()) + " rows");
  }
  Triangle t;
  t.reserve(rows);
  for (unsigned m = 1; m <= rows; ++m) t.push_back(minv.row(m));
  return t;
}

Triangle terms_triangle(const TriangularMatrix& minv, unsigned rows) {
  Triangle t;
  t.reserve(rows);
  for (unsigned n = 1; n <= rows; ++n) t.push_back(decomposition_row(n, minv).terms);
  return t;
}

Triangle qcoeffs_triangle(QPolynomialFamily& family, unsigned rows) {
  Triangle t;
  t.reserve(rows);
  for (unsigned l = 0; l < rows; ++l) t.push_back(family.q(l).coefficients());
  return t;
}

std::string triangle_to_json(const Triangle& t) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& row : t) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& v : row) jrow.push_back(v.str());
    doc.push_back(std::move(jrow));
  }
  return doc.dump();
}

Triangle triangle_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("triangle JSON parse failed: ") + e.what());
  }
  if (!doc.is_array()) throw Error("triangle JSON must be an array of arrays");
  Triangle t;
  for (const auto& jrow : doc) {
    if (!jrow.is_array()) throw Error("triangle JSON must be an array of arrays");
    std::vector<BigRational> row;
    for (const auto& v : jrow) {
      if (!v.is_string()) throw Error("triangle JSON entries must be \"num/den\" strings");
      row.push_back(BigRational::from_string(v.get<std::string>()));
    }
    t.push_back(std::move(row));
  }
  return t;
}

std::string triangle_to_csv(const Triangle& t, bool zero_based_poly_schema) {
  std::ostringstream out;
  out << (zero_based_poly_schema ? "l,power,numerator,denominator\n"
                                 : "row,col,numerator,denominator\n");
  const unsigned base = zero_based_poly_schema ? 0 : 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      out << (i + base) << ',' << (j + base) << ',' << t[i][j].numerator().get_str()
          << ',' << t[i][j].denominator().get_str() << '\n';
    }
  }
  return out.str();
}

Triangle triangle_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw Error("triangle CSV is empty");
  const bool zero_based = line.rfind("l,", 0) == 0;
  Triangle t;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string row_s, col_s, num_s, den_s;
    if (!std::getline(fields, row_s, ',') || !std::getline(fields, col_s, ',') ||
        !std::getline(fields, num_s, ',') || !std::getline(fields, den_s)) {
      throw Error("triangle CSV line " + std::to_string(lineno) + " is malformed: " + line);
    }
    const std::size_t row = std::stoul(row_s) - (zero_based ? 0 : 1);
    const std::size_t col = std::stoul(col_s) - (zero_based ? 0 : 1);
    if (t.size() <= row) t.resize(row + 1);
    if (t[row].size() <= col) t[row].resize(col + 1);
    t[row][col] = BigRational(BigInt(num_s), BigInt(den_s));
  }
  return t;
}

std::string triangle_to_plain(const Triangle& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j) out << ' ';
      out << t[i][j].str();
    }
    out << '\n';
  }
  return out.str();
}

} // namespace bernmat
