#pragma once

#include <cstddef>

#include "homdil/matrix.hpp"

// Data-parallel inner loops of the exact solvers. `serial` is the reference
// implementation the tests compare against; `omp` splits the same loops over
// rows with OpenMP. Both produce identical results: the work per row is
// independent and exact.
namespace homdil::kernels {

namespace serial {
/// With m(pivot_row, pivot_col) == 1 and the pivot row zero left of
/// pivot_col, clears column pivot_col in every other row.
void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t pivot_col);
Matrix multiply(const Matrix& a, const Matrix& b);
}  // namespace serial

namespace omp {
void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t pivot_col);
Matrix multiply(const Matrix& a, const Matrix& b);
}  // namespace omp

/// Entry count at which the dispatching kernels switch to OpenMP.
inline constexpr std::size_t kParallelThreshold = 4096;

void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t pivot_col);
Matrix multiply(const Matrix& a, const Matrix& b);

bool openmp_available();
int max_threads();

}  // namespace homdil::kernels
