#include "finspinor/json_io.hpp"

#include <cmath>
#include <string>

namespace finspinor {

namespace {

nlohmann::json complex_entries(const CMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return entries;
}

CMatrix complex_entries_to_matrix(const nlohmann::json& entries, int n) {
  if (!entries.is_array() || static_cast<int>(entries.size()) != n * n) {
    throw DomainError("matrix entries: expected " + std::to_string(n * n) +
                      " [re, im] pairs");
  }
  CMatrix m(n, n);
  int k = 0;
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw DomainError("matrix entries: each entry must be an [re, im] pair");
    }
    const Complex z(pair[0].get<double>(), pair[1].get<double>());
    if (!is_finite(z)) throw DomainError("matrix entries: non-finite entry");
    m(k / n, k % n) = z;
    ++k;
  }
  return m;
}

int read_dim(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw DomainError("document: missing integer field \"n\"");
  }
  const int n = doc["n"].get<int>();
  if (n < 2) throw DomainError("document: n must be at least 2");
  return n;
}

}  // namespace

nlohmann::json matrix_document(const CMatrix& m) {
  return {{"n", m.rows()}, {"entries", complex_entries(m)}};
}

CMatrix matrix_from_document(const nlohmann::json& doc, int expected_dim) {
  const int n = read_dim(doc);
  if (expected_dim > 0 && n != expected_dim) {
    throw DomainError("matrix document: n = " + std::to_string(n) +
                      " does not match requested dimension " +
                      std::to_string(expected_dim));
  }
  if (!doc.contains("entries")) throw DomainError("matrix document: missing entries");
  return complex_entries_to_matrix(doc["entries"], n);
}

nlohmann::json basis_document(const HermBasis& basis, std::string_view basis_id) {
  nlohmann::json elements = nlohmann::json::array();
  for (const HermVector& e : basis.elements()) elements.push_back(complex_entries(e.matrix()));
  nlohmann::json duals = nlohmann::json::array();
  for (const CMatrix& d : basis.duals()) duals.push_back(complex_entries(d));
  return {{"n", basis.dim()},
          {"basis_id", std::string(basis_id)},
          {"elements", std::move(elements)},
          {"duals", std::move(duals)}};
}

HermBasis basis_from_document(const nlohmann::json& doc) {
  const int n = read_dim(doc);
  const int count = n * n;
  if (!doc.contains("elements") || !doc["elements"].is_array() ||
      static_cast<int>(doc["elements"].size()) != count) {
    throw DomainError("basis document: expected " + std::to_string(count) +
                      " elements");
  }
  std::vector<HermVector> elements;
  elements.reserve(count);
  for (const auto& entry : doc["elements"]) {
    elements.emplace_back(complex_entries_to_matrix(entry, n));
  }
  HermBasis basis(std::move(elements));

  if (!doc.contains("duals") || !doc["duals"].is_array() ||
      static_cast<int>(doc["duals"].size()) != count) {
    throw DomainError("basis document: expected " + std::to_string(count) + " duals");
  }
  for (int a = 0; a < count; ++a) {
    const CMatrix stored = complex_entries_to_matrix(doc["duals"][a], n);
    if ((stored - basis.duals()[a]).cwiseAbs().maxCoeff() > 1e-9) {
      throw DomainError("basis document: stored dual " + std::to_string(a) +
                        " disagrees with the recomputed one");
    }
  }
  return basis;
}

nlohmann::json metric_document(const FinslerMetric& metric, std::string_view basis_id) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [indices, value] : metric.coefficients()) {
    coeffs.push_back({{"indices", indices}, {"value", value}});
  }
  return {{"n", metric.dim()},
          {"basis_id", std::string(basis_id)},
          {"coefficients", std::move(coeffs)}};
}

FinslerMetric metric_from_document(const nlohmann::json& doc) {
  const int n = read_dim(doc);
  if (!doc.contains("basis_id") || !doc["basis_id"].is_string()) {
    throw DomainError("metric document: missing basis_id");
  }
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw DomainError("metric document: missing coefficients");
  }
  std::map<std::vector<int>, double> coeffs;
  for (const auto& item : doc["coefficients"]) {
    if (!item.is_object() || !item.contains("indices") || !item.contains("value") ||
        !item["indices"].is_array() || !item["value"].is_number()) {
      throw DomainError("metric document: malformed coefficient");
    }
    std::vector<int> indices = item["indices"].get<std::vector<int>>();
    const double value = item["value"].get<double>();
    if (!coeffs.emplace(std::move(indices), value).second) {
      throw DomainError("metric document: duplicate index multiset");
    }
  }
  return FinslerMetric(n, std::move(coeffs));  // validates ranges and sorting
}

nlohmann::json fl_matrix_document(const FLMatrix& map) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < map.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < map.entries.cols(); ++j) {
      entries.push_back(map.entries(i, j));
    }
  }
  return {{"n", map.dim}, {"rows", map.entries.rows()}, {"entries", std::move(entries)}};
}

FLMatrix fl_matrix_from_document(const nlohmann::json& doc) {
  const int n = read_dim(doc);
  const int rows = n * n;
  if (!doc.contains("entries") || !doc["entries"].is_array() ||
      static_cast<int>(doc["entries"].size()) != rows * rows) {
    throw DomainError("map document: expected " + std::to_string(rows * rows) +
                      " entries");
  }
  RMatrix m(rows, rows);
  int k = 0;
  for (const auto& v : doc["entries"]) {
    if (!v.is_number()) throw DomainError("map document: non-numeric entry");
    const double value = v.get<double>();
    if (!std::isfinite(value)) throw DomainError("map document: non-finite entry");
    m(k / rows, k % rows) = value;
    ++k;
  }
  return FLMatrix{n, std::move(m)};
}

}  // namespace finspinor
