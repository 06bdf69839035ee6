#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "homdil/rational.hpp"

namespace homdil {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(const Vector& v);
  static Matrix row(const Vector& v);
  /// Square matrix with a single 1 at (r, c).
  static Matrix unit(std::size_t n, std::size_t r, std::size_t c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row_span(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row_span(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return entries_; }
  std::vector<Rational>& entries() { return entries_; }

  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, const Rational& scalar);
Matrix operator*(const Rational& scalar, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix vstack(std::span<const Matrix> blocks);
/// Block-diagonal matrix.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Multi-line human-readable rendering, one row per line.
std::string format(const Matrix& m);

}  // namespace homdil
