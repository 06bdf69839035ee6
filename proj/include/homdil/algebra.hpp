#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homdil/check.hpp"
#include "homdil/matrix.hpp"

namespace homdil {

/// Records that basis element i of an algebra is the matrix unit
/// E_{units[i].first, units[i].second} (0-based) inside M_n.
struct MatrixUnitLayout {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> units;
};

/// Finite-dimensional unital associative algebra over Q given by structure
/// constants: g_i g_j = sum_k c(i, j, k) g_k.
class Algebra {
 public:
  Algebra(std::string name, std::vector<std::string> labels, std::vector<Rational> constants, Vector unit,
          std::optional<MatrixUnitLayout> layout = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& constants() const { return constants_; }
  const Vector& unit() const { return unit_; }
  const std::optional<MatrixUnitLayout>& matrix_units() const { return layout_; }

  Vector basis_vector(std::size_t i) const;
  /// Matrix of x -> g_i x.
  Matrix left_multiplication(std::size_t i) const;
  /// Matrix of x -> x g_i.
  Matrix right_multiplication(std::size_t i) const;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> constants_;
  Vector unit_;
  std::optional<MatrixUnitLayout> layout_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraCheck {
  Check check;
  /// First (i, j, k) violating associativity, when that is the failure.
  std::optional<std::array<std::size_t, 3>> triple;
  explicit operator bool() const { return check.ok; }
};

AlgebraCheck validate_algebra(const Algebra& a);

/// Bilinear product through the structure constants.
Vector mul(const Algebra& a, const Vector& x, const Vector& y);

/// M_n with matrix units ordered column-major: E11, E21, ..., En1, E12, ...
AlgebraPtr full_matrix_algebra(std::size_t n);
/// Upper triangular T_n ordered by column blocks: E11; E12, E22; E13, E23, E33; ...
AlgebraPtr upper_triangular_algebra(std::size_t n);

struct StructureConstant {
  std::size_t i = 0, j = 0, k = 0;
  Rational value;
};

/// Algebra from a sparse list of structure constants (omitted ones are zero).
AlgebraPtr custom_algebra(std::size_t dim, Vector unit, const std::vector<StructureConstant>& constants,
                          std::vector<std::string> labels = {});

/// For matrix-unit algebras: coordinates -> n x n matrix, and back. from_matrix
/// throws if the matrix is not in the algebra.
Matrix to_matrix(const Algebra& a, const Vector& coords);
Vector from_matrix(const Algebra& a, const Matrix& m);

}  // namespace homdil
