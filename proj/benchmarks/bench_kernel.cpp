#include "vecinv/gltheory.hpp"
#include "vecinv/kernelcalc.hpp"
#include "vecinv/tables.hpp"

#include <benchmark/benchmark.h>

using namespace vecinv;

namespace {

// nullspace of phi at a single total degree, n = 4
void BM_KernelComponent(benchmark::State& state) {
  DihedralParams p(4, static_cast<int>(state.range(0)));
  int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_component(p, d).dimension);
}
BENCHMARK(BM_KernelComponent)->Args({2, 10})->Args({3, 8})->Args({3, 10})->Unit(benchmark::kMillisecond);

void BM_MinimalGenerators(benchmark::State& state) {
  DihedralParams p(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_generators_by_degree(p, 10));
}
BENCHMARK(BM_MinimalGenerators)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SubmoduleBasis(benchmark::State& state) {
  auto r = make_R_2n2k(4, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(submodule_basis(r).size());
}
BENCHMARK(BM_SubmoduleBasis)->Unit(benchmark::kMillisecond);

void BM_GLGeneration(benchmark::State& state) {
  int n = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_gl_generation(DihedralParams(n, m), relation_generators(n, m), 2 * n + 2).passed());
}
BENCHMARK(BM_GLGeneration)->Args({4, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_Hironaka(benchmark::State& state) {
  auto spec = state.range(0) ? cyclic_m3_hironaka() : d8_m3_hironaka();
  for (auto _ : state) benchmark::DoNotOptimize(verify_hironaka(spec, 16).passed());
}
BENCHMARK(BM_Hironaka)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_KernelDecomposition(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_decomposition(4, 3, D).size());
}
BENCHMARK(BM_KernelDecomposition)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
