#include "homdil/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "homdil/kernels.hpp"

namespace homdil {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Vector& v) { return Matrix(v.size(), 1, v); }
Matrix Matrix::row(const Vector& v) { return Matrix(1, v.size(), v); }

Matrix Matrix::unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row_span(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto src = row_span(rows[i]);
    std::copy(src.begin(), src.end(), out.row_span(i).begin());
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return homdil::is_zero(x); });
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, const Rational& scalar) { return a *= scalar; }
Matrix operator*(const Rational& scalar, Matrix a) { return a *= scalar; }

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::multiply(a, b); }

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!is_zero(a(r, c)) && !is_zero(v[c])) acc += a(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  const Matrix blocks[] = {a, b};
  return vstack(blocks);
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (const auto& b : blocks) entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return Matrix(rows, cols, std::move(entries));
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

std::string format(const Matrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i] = to_string(m.entries()[i]);
    width = std::max(width, cells[i].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& s = cells[r * m.cols() + c];
      out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace homdil
