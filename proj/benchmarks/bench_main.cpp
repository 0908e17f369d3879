#include <benchmark/benchmark.h>

#include "stereograph/stereograph.hpp"

using namespace stereograph;

namespace {

void BM_CharacteristicPolynomial(benchmark::State& state) {
  const StereotypeGraph g = gen_random(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_polynomial(g));
}
BENCHMARK(BM_CharacteristicPolynomial)->DenseRange(3, 8);

void BM_ChromaticPolynomial(benchmark::State& state) {
  const StereotypeGraph g = gen_random(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_polynomial(g.graph()));
}
BENCHMARK(BM_ChromaticPolynomial)->DenseRange(3, 7);

void BM_ChromaticNumber(benchmark::State& state) {
  const StereotypeGraph g = gen_random(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g.graph()));
}
BENCHMARK(BM_ChromaticNumber)->DenseRange(4, 16, 4);

void BM_ChromaticNumberLadder(benchmark::State& state) {
  const StereotypeGraph g = gen_complete_ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g.graph()));
}
BENCHMARK(BM_ChromaticNumberLadder)->DenseRange(4, 16, 4);

void BM_Isomorphism(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph a = gen_complete_ladder(n).graph();
  // Same graph with the pairs listed in reverse.
  Graph b(a.vertex_count());
  const std::size_t last = a.vertex_count() - 1;
  for (const auto& [u, v] : a.edges()) b.add_edge(last - u, last - v);
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(a, b));
}
BENCHMARK(BM_Isomorphism)->DenseRange(4, 16, 4);

void BM_ReduceToK2(benchmark::State& state) {
  const StereotypeGraph g = gen_complete_bipartite(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_k2(g));
}
BENCHMARK(BM_ReduceToK2)->DenseRange(4, 32, 7);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Census)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
