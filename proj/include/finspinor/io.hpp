#pragma once

// JSON and CSV shapes for matrices, bases, maps, forms and decompositions.
//
// Complex matrices are arrays of rows, each row an array of [re, im] pairs.
// Real matrices are arrays of rows of numbers. Doubles are written in their
// shortest round-trip form.

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "finspinor/epimorphism.hpp"
#include "finspinor/error.hpp"
#include "finspinor/herm.hpp"
#include "finspinor/numeric.hpp"
#include "finspinor/special_n3.hpp"

namespace finspinor::io {

using Json = nlohmann::ordered_json;

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const HermBasis& b) {
  Json lower = Json::array();
  Json upper = Json::array();
  for (const auto& e : b.e_lower) lower.push_back(to_json(e));
  for (const auto& e : b.e_upper) upper.push_back(to_json(e));
  return Json{{"n", b.n}, {"e_lower", lower}, {"e_upper", upper}, {"pairing_residual", pairing_residual(b)}};
}

inline Json to_json(const FinsLinearMap& l) {
  return Json{{"n", l.n}, {"rows", l.entries.rows()}, {"cols", l.entries.cols()}, {"entries", to_json(l.entries)}};
}

inline std::string form_key(const std::vector<int>& idx) {
  std::string key;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(idx[i]);
  }
  return key;
}

inline Json to_json(const FormTensor& g) {
  Json coeffs = Json::object();
  for (const auto& [idx, c] : g.coeffs) coeffs[form_key(idx)] = c;
  return Json{{"n", g.n}, {"degree", g.degree}, {"coefficients", coeffs}};
}

inline Json to_json(const SL3Decomposition& f) {
  return Json{{"branch", SL3Decomposition::kBranch},
              {"d", to_json(f.d)},
              {"factors", Json{{"d1", to_json(f.d1)}, {"d2", to_json(f.d2)}, {"d3", to_json(f.d3)}, {"d4", to_json(f.d4)}}},
              {"reconstruction_residual", f.reconstruction_residual}};
}

/// Parses a square complex matrix: [[[re, im], ...], ...].
inline ComplexMatrix complex_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != n) throw ParseError("matrix must be square: row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") must be [re, im]");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  if (!m.all_finite()) throw ParseError("matrix has non-finite entries");
  return m;
}

inline ComplexMatrix parse_complex_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return complex_matrix_from_json(j);
}

inline ComplexMatrix read_complex_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_complex_matrix(text);
}

inline RealMatrix real_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  RealMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged real matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) throw ParseError("real matrix entries must be numbers");
      m(r, c) = j[r][c].get<double>();
    }
  }
  return m;
}

/// %.17g formatting for CSV cells.
inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// row,col,value
inline std::string to_csv(const RealMatrix& m) {
  std::ostringstream os;
  os << "row,col,value\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) os << i << ',' << j << ',' << num(m(i, j)) << '\n';
  return os.str();
}

/// Rows of <label>,row,col,re,im without a header.
inline void append_csv(std::ostringstream& os, const std::string& label, const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << label << ',' << i << ',' << j << ',' << num(m(i, j).real()) << ',' << num(m(i, j).imag()) << '\n';
}

}  // namespace finspinor::io
