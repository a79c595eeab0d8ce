#include "qhyp/serialize.hpp"

namespace qhyp {

nlohmann::json matrix_to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix_from_json: expected array");
  size_t rows = j.size();
  size_t cols = rows ? j.at(0).size() : 0;
  QMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (row.size() != cols) throw std::invalid_argument("matrix_from_json: ragged rows");
    for (size_t k = 0; k < cols; ++k)
      m(i, k) = QScalar::parse(row.at(k).get<std::string>());
  }
  return m;
}

nlohmann::json matrix_eval_json(const QMatrix& m, const mpq_class& q0) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).eval_at(q0).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json nfpoly_to_json(const NFPoly& p) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [m, c] : p.terms()) obj[m.str()] = c.str();
  return obj;
}

NFPoly nfpoly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("nfpoly_from_json: expected object");
  NFPoly p;
  for (const auto& [key, val] : j.items())
    p.add(Monomial::parse(key), QScalar::parse(val.get<std::string>()));
  return p;
}

}  // namespace qhyp
