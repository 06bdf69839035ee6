#include <gtest/gtest.h>

#include <omp.h>

#include "homdil/kernels.hpp"
#include "homdil/qlinalg.hpp"
#include "oracles.hpp"

using namespace homdil;

namespace {

Matrix fractional_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  const Vector num = seeded_random_vector(rows * cols, seed);
  const Vector den = seeded_random_vector(rows * cols, seed + 1000);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    const long d = std::abs(den[i].get_num().get_si()) + 1;
    m.entries()[i] = make_rational(num[i].get_num().get_si(), d);
  }
  return m;
}

// Normalizes the pivot row like the rref driver does before eliminating.
void normalize_pivot(Matrix& m, std::size_t r, std::size_t c) {
  const Rational inv = 1 / m(r, c);
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
}

}  // namespace

TEST(Kernels, OpenMpIsCompiledIn) {
  EXPECT_TRUE(kernels::openmp_available());
  EXPECT_GE(kernels::max_threads(), 1);
}

TEST(Kernels, MultiplyParitySmall) {
  const Matrix a = fractional_matrix(5, 7, 1), b = fractional_matrix(7, 3, 2);
  const Matrix ref = oracle::product(a, b);
  EXPECT_EQ(kernels::serial::multiply(a, b), ref);
  EXPECT_EQ(kernels::omp::multiply(a, b), ref);
  EXPECT_EQ(kernels::multiply(a, b), ref);
}

TEST(Kernels, MultiplyParityAboveThreshold) {
  const Matrix a = fractional_matrix(48, 48, 3), b = fractional_matrix(48, 48, 4);
  ASSERT_GE(a.rows() * a.cols() * b.cols(), kernels::kParallelThreshold * 16);
  const Matrix serial = kernels::serial::multiply(a, b);
  EXPECT_EQ(kernels::omp::multiply(a, b), serial);
  EXPECT_EQ(kernels::multiply(a, b), serial);
  EXPECT_EQ(a * b, serial);
}

TEST(Kernels, MultiplyParityAcrossThreadCounts) {
  const Matrix a = fractional_matrix(20, 30, 5), b = fractional_matrix(30, 10, 6);
  const Matrix serial = kernels::serial::multiply(a, b);
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    EXPECT_EQ(kernels::omp::multiply(a, b), serial) << threads << " threads";
  }
  omp_set_num_threads(saved);
}

TEST(Kernels, MultiplyShapeMismatch) {
  EXPECT_THROW(kernels::serial::multiply(Matrix(2, 3), Matrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(kernels::omp::multiply(Matrix(2, 3), Matrix(2, 3)), std::invalid_argument);
}

TEST(Kernels, EliminateColumnParity) {
  for (std::size_t size : {6u, 70u}) {
    Matrix m = fractional_matrix(size, size, 7 + size);
    if (is_zero(m(0, 0))) m(0, 0) = 1;
    normalize_pivot(m, 0, 0);
    Matrix a = m, b = m;
    kernels::serial::eliminate_column(a, 0, 0);
    kernels::omp::eliminate_column(b, 0, 0);
    EXPECT_EQ(a, b);
    for (std::size_t r = 1; r < size; ++r) EXPECT_TRUE(is_zero(a(r, 0)));
  }
}

TEST(Kernels, RrefParityAboveThreshold) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Matrix m = fractional_matrix(70, 70, 11 + seed);
    // Rank-deficient: last rows combine earlier ones.
    for (std::size_t c = 0; c < 70; ++c) {
      m(69, c) = m(0, c) + m(1, c);
      m(68, c) = m(2, c) * 3;
    }
    ASSERT_GE(m.rows() * m.cols(), kernels::kParallelThreshold);
    const auto par = rref(m);
    const auto ser = rref_serial(m);
    EXPECT_EQ(par.reduced, ser.reduced);
    EXPECT_EQ(par.pivot_cols, ser.pivot_cols);
    EXPECT_EQ(par.rank, oracle::rank(m));
  }
}
