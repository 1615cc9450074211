#include <benchmark/benchmark.h>

#include <random>

#include <nexakt/exactlin.hpp>

namespace {

nexakt::Mat random_mat(std::uint32_t p, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  nexakt::Field f(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<nexakt::Residue> e(rows * cols);
  for (auto& x : e) x = d(rng);
  return nexakt::Mat(f, rows, cols, std::move(e));
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  nexakt::Mat a = random_mat(static_cast<std::uint32_t>(state.range(1)), n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(nexakt::rref(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->ArgsProduct({{16, 32, 64, 128, 256}, {2, 101, 2147483647}})->Complexity(benchmark::oNCubed);

void BM_KernelBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  nexakt::Mat a = random_mat(101, n / 2, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nexakt::kernel_basis(a));
}
BENCHMARK(BM_KernelBasis)->RangeMultiplier(2)->Range(16, 256);

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  nexakt::Mat a = random_mat(101, n, n, 3), b = random_mat(101, n, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(16, 256);

}  // namespace
