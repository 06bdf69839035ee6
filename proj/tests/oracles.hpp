#pragma once

// Independent reference computations for the tests: plain Gauss-Jordan on
// mpq_class and brute-force matrix-unit algebra, written without the library's
// elimination code.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "homdil/matrix.hpp"

namespace oracle {

using Grid = std::vector<std::vector<mpq_class>>;

inline Grid grid(const homdil::Matrix& m) {
  Grid g(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  return g;
}

inline std::size_t rank(Grid g) {
  if (g.empty()) return 0;
  const std::size_t rows = g.size(), cols = g[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && g[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(g[p], g[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (g[i][c] == 0) continue;
      const mpq_class f = g[i][c] / g[r][c];
      for (std::size_t j = c; j < cols; ++j) g[i][j] -= f * g[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const homdil::Matrix& m) { return rank(grid(m)); }

inline homdil::Matrix product(const homdil::Matrix& a, const homdil::Matrix& b) {
  homdil::Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

inline bool is_zero_product(const homdil::Matrix& m, const homdil::Vector& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpq_class acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    if (acc != 0) return false;
  }
  return true;
}

/// n x n matrix with a 1 at (r, c).
inline homdil::Matrix unit(std::size_t n, std::size_t r, std::size_t c) {
  homdil::Matrix m(n, n);
  m(r, c) = 1;
  return m;
}

/// Vectorize x -> A x on the given matrix-unit basis (as (row, col) pairs).
inline homdil::Matrix left_multiplication(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& basis,
                                          const homdil::Matrix& a) {
  const std::size_t d = basis.size();
  homdil::Matrix out(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const homdil::Matrix prod = product(a, unit(n, basis[j].first, basis[j].second));
    for (std::size_t i = 0; i < d; ++i) out(i, j) = prod(basis[i].first, basis[i].second);
  }
  return out;
}

}  // namespace oracle
