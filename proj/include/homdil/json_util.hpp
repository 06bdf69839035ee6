#pragma once

#include <string>

#include <json.hpp>

#include "homdil/matrix.hpp"
#include "homdil/qlinalg.hpp"

namespace homdil {

/// Integer >= 0, whether stored signed or unsigned.
inline bool is_nonnegative_integer(const nlohmann::json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0);
}

/// Accepts a JSON string "p/q" or an integer. `where` names the field for
/// diagnostics.
Rational rational_from_json(const nlohmann::json& j, const std::string& where);
Vector vector_from_json(const nlohmann::json& j, const std::string& where);
/// Row-major nested array. With expected shape, a mismatch throws naming it.
Matrix matrix_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& m);
/// {"ambient_dim", "basis"}.
nlohmann::json to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace homdil
