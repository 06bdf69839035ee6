#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "homdil/algebra.hpp"
#include "homdil/check.hpp"
#include "homdil/matrix.hpp"
#include "homdil/qlinalg.hpp"

namespace homdil {

/// A unital linear map phi from an algebra into L(V), stored as one
/// dim_v x dim_v matrix per algebra basis element.
struct LinearSystem {
  AlgebraPtr algebra;
  std::size_t dim_v = 0;
  std::vector<Matrix> phi;

  std::size_t dim_a() const { return algebra->dim(); }
};

Check validate_system(const LinearSystem& sys);

/// sum_i a_i phi(g_i).
Matrix apply_phi(const LinearSystem& sys, const Vector& a);

/// Named constructors for the maps used in the worked examples. Parameters:
///   normalized_trace      {"algebra": "full_matrix"|"upper_triangular", "n"}   A -> tr(A)/n on Q^1
///   identity              {"algebra", "n"}                                     A -> A on Q^n
///   transpose             {"n"}                                                M_n -> M_n, A -> A^t
///   transpose_t_to_m      {"n"}                                                T_n -> M_n, A -> A^t
///   scaled_trace_identity {"n"}                                                M_n -> M_n, A -> tr(A)/n I
///   coefficient_map       {"a", "b", "c", "d"}: 4 rationals each; M_2 -> M_2,
///                         entry (r, s) of phi(A) is a linear form in the row-major entries of A
///   diagonal_compression  {"alpha", "beta", "xi", "gamma"}: 2 rationals each; M_2 -> M_2 diagonal map
///   diag_map_d, diag_map_phi  the two instantiations of diagonal_compression
/// Throws std::invalid_argument for unknown names, malformed parameters, or
/// a result that fails validate_system.
LinearSystem builtin_system(const std::string& name, const nlohmann::json& params = nlohmann::json::object());

std::vector<std::string> builtin_system_names();

/// {a : phi(b a) = 0 for every b}: the largest left ideal inside ker(phi).
Subspace largest_left_ideal_in_kernel(const LinearSystem& sys);

}  // namespace homdil
