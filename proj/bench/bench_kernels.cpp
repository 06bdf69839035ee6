#include <benchmark/benchmark.h>

#include "homdil/dilation.hpp"
#include "homdil/kernels.hpp"
#include "homdil/linsys.hpp"
#include "homdil/qlinalg.hpp"

namespace {

using homdil::Matrix;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  const auto v = homdil::seeded_random_vector(rows * cols, seed);
  return Matrix(rows, cols, v);
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(homdil::kernels::serial::multiply(a, b));
}

void BM_MultiplyOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(homdil::kernels::omp::multiply(a, b));
}

void BM_RrefSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n + n / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(homdil::rref_serial(a));
}

void BM_RrefDispatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n + n / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(homdil::rref(a));
}

// End to end: maximal invariant subspace of the universal dilation of A -> A^t on M_n.
void BM_MaximalInvariantTranspose(benchmark::State& state) {
  const auto sys = homdil::builtin_system("transpose", {{"n", state.range(0)}});
  const auto u = homdil::universal_dilation(sys);
  for (auto _ : state) benchmark::DoNotOptimize(homdil::maximal_invariant_subspace_in_kernel(u.rep, u.s));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(16)->Arg(48)->Arg(96);
BENCHMARK(BM_MultiplyOmp)->Arg(16)->Arg(48)->Arg(96);
BENCHMARK(BM_RrefSerial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_RrefDispatch)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_MaximalInvariantTranspose)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
