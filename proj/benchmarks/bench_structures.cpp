#include <benchmark/benchmark.h>

#include <nexakt/nexakt.hpp>

using namespace nexakt;

namespace {

// Hom between the sum of all projectives of the Auslander algebra of A_m and itself.
void BM_HomBasisAuslander(benchmark::State& state) {
  AlgebraPtr alg = gen_auslander_linear_A(static_cast<std::size_t>(state.range(0)));
  std::vector<Module> projs;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) projs.push_back(projective_module(alg, v));
  Module lambda = direct_sum(alg, projs).object;
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(lambda, lambda));
  state.counters["dim"] = static_cast<double>(alg->dimension());
}
BENCHMARK(BM_HomBasisAuslander)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ExtTable(benchmark::State& state) {
  auto ex = gen_linear_An_J2(2, static_cast<std::size_t>(state.range(0)));
  std::vector<Module> list;
  for (auto& lm : nakayama_indecomposables(ex.algebra)) list.push_back(lm.module);
  for (auto _ : state) benchmark::DoNotOptimize(ExtTable(ex.algebra, list, 1));
}
BENCHMARK(BM_ExtTable)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_NctSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  auto ex = gen_linear_An_J2(n, m);
  std::vector<Module> list;
  for (auto& lm : nakayama_indecomposables(ex.algebra)) list.push_back(lm.module);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_nct_search(ex.algebra, n, list, true));
}
BENCHMARK(BM_NctSearch)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Args({2, 4})->Args({3, 3})
    ->Unit(benchmark::kMillisecond);

void BM_NCokernelLadder(benchmark::State& state) {
  auto ex = gen_linear_An_J2(2, static_cast<std::size_t>(state.range(0)));
  std::vector<Module> gens;
  for (auto& lm : ex.expected) gens.push_back(lm.module);
  AddCat m(ex.algebra, gens);
  Module s0 = simple_module(ex.algebra, 0);
  Morphism env = injective_envelope(s0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_n_exact(n_cokernel(env, m, 2), m, 2));
}
BENCHMARK(BM_NCokernelLadder)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_AngleVerification(benchmark::State& state) {
  AlgebraPtr alg = gen_preprojective_A(2);
  Module s1 = simple_module(alg, 0), p1 = projective_module(alg, 0), p2 = projective_module(alg, 1);
  std::vector<Module> indecs{s1, simple_module(alg, 1), p1, p2};
  FrobeniusCtx ctx = check_frobenius_setup(AddCat(alg, {p1, p2, s1}), 2, indecs);
  Morphism socle = hom_basis(s1, p2).front();
  for (auto _ : state) {
    Angle a = standard_angle(ctx, socle);
    benchmark::DoNotOptimize(verify_angle_exact(ctx, rotate_angle(ctx, a)));
  }
}
BENCHMARK(BM_AngleVerification)->Unit(benchmark::kMillisecond);

}  // namespace
