#include <stdexcept>

#include "homdil/kernels.hpp"

namespace homdil::kernels::serial {

void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t pivot_col) {
  const std::size_t cols = m.cols();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r == pivot_row || is_zero(m(r, pivot_col))) continue;
    const Rational factor = m(r, pivot_col);
    for (std::size_t c = pivot_col; c < cols; ++c) {
      if (!is_zero(m(pivot_row, c))) m(r, c) -= factor * m(pivot_row, c);
    }
  }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

}  // namespace homdil::kernels::serial
