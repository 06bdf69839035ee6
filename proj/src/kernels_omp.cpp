#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "homdil/kernels.hpp"

namespace homdil::kernels {

namespace omp {

void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t pivot_col) {
  const auto rows = static_cast<long>(m.rows());
  const std::size_t cols = m.cols();
#pragma omp parallel for schedule(dynamic, 8)
  for (long r = 0; r < rows; ++r) {
    const auto row = static_cast<std::size_t>(r);
    if (row == pivot_row || is_zero(m(row, pivot_col))) continue;
    const Rational factor = m(row, pivot_col);
    for (std::size_t c = pivot_col; c < cols; ++c) {
      if (!is_zero(m(pivot_row, c))) m(row, c) -= factor * m(pivot_row, c);
    }
  }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  const auto rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < rows; ++i) {
    const auto row = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(row, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) out(row, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

}  // namespace omp

void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t pivot_col) {
  if (m.rows() * m.cols() >= kParallelThreshold) {
    omp::eliminate_column(m, pivot_row, pivot_col);
  } else {
    serial::eliminate_column(m, pivot_row, pivot_col);
  }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.rows() * a.cols() * b.cols() >= kParallelThreshold * 16) return omp::multiply(a, b);
  return serial::multiply(a, b);
}

bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace homdil::kernels
