#include "homdil/json_util.hpp"

#include <stdexcept>

namespace homdil {

Rational rational_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  throw std::invalid_argument(where + ": expected a rational (\"p/q\" string or integer), got " + j.dump());
}

Vector vector_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix matrix_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected a nested array (matrix rows)");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Rational> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) throw std::invalid_argument(row_where + ": expected an array (matrix row)");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) {
      throw std::invalid_argument(row_where + ": row has " + std::to_string(j[r].size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      entries.push_back(rational_from_json(j[r][c], row_where + "[" + std::to_string(c) + "]"));
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

nlohmann::json to_json(const Rational& r) { return to_string(r); }

nlohmann::json to_json(const Vector& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::json to_json(const Matrix& m) {
  auto out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vector(r)));
  return out;
}

nlohmann::json to_json(const Subspace& s) {
  return {{"ambient_dim", s.ambient_dim()}, {"basis", to_json(s.basis())}};
}

Subspace subspace_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("ambient_dim") || !is_nonnegative_integer(j["ambient_dim"])) {
    throw std::invalid_argument(where + ": expected {\"ambient_dim\": int, \"basis\": [[...], ...]}");
  }
  const auto n = j["ambient_dim"].get<std::size_t>();
  const Matrix rows = j.contains("basis") ? matrix_from_json(j["basis"], where + ".basis") : Matrix(0, n);
  if (rows.rows() > 0 && rows.cols() != n) {
    throw std::invalid_argument(where + ".basis: vectors have length " + std::to_string(rows.cols()) +
                                ", expected ambient_dim " + std::to_string(n));
  }
  return Subspace::span_rows(n, rows.rows() == 0 ? Matrix(0, n) : rows);
}

}  // namespace homdil
