#include <benchmark/benchmark.h>

#include "toriccode/eval_code.hpp"
#include "toriccode/intlattice.hpp"
#include "toriccode/mindist.hpp"
#include "toriccode/vanishing_ideal.hpp"

using namespace toric;

namespace {

void BM_EnumerateCycle(benchmark::State& state) {
  const auto f = FiniteField::from_order(static_cast<std::uint64_t>(state.range(1)));
  const auto c = families::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_x(c, f).size());
}
BENCHMARK(BM_EnumerateCycle)->Args({5, 9})->Args({7, 5})->Unit(benchmark::kMillisecond);

void BM_Regularity(benchmark::State& state) {
  const auto x = enumerate_x(families::cycle(static_cast<int>(state.range(0))),
                             FiniteField::from_order(static_cast<std::uint64_t>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(regularity(x));
}
BENCHMARK(BM_Regularity)->Args({3, 9})->Args({7, 5})->Unit(benchmark::kMillisecond);

void BM_CodeRref(benchmark::State& state) {
  const auto x = enumerate_x(families::cycle(3), FiniteField::make(3, 2));
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(code(x, d).dimension);
}
BENCHMARK(BM_CodeRref)->Arg(2)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_BruteForce(benchmark::State& state) {
  const auto x = enumerate_x(families::cycle(3), FiniteField::make(3, 2));
  const auto c = code(x, static_cast<int>(state.range(0)));
  SearchOptions so;
  so.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_bruteforce(c, so).value);
}
BENCHMARK(BM_BruteForce)->Args({1, 1})->Args({2, 1})->Args({2, 2})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_InformationSets(benchmark::State& state) {
  const auto x = enumerate_x(families::complete_graph(4), FiniteField::make(2, 2));
  const auto c = code(x, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_isd(c).value);
}
BENCHMARK(BM_InformationSets)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_InterpolateGb(benchmark::State& state) {
  const auto x = enumerate_x(families::cycle(static_cast<int>(state.range(0))), FiniteField::from_order(4));
  const GbOptions opts{state.range(1) ? GbStrategy::kCharacter : GbStrategy::kElimination};
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_gb(x, opts).elements.size());
}
BENCHMARK(BM_InterpolateGb)->Args({4, 1})->Args({4, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto rel = difference_lattice(families::complete_graph(static_cast<int>(state.range(0))).vectors());
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(rel).rank);
}
BENCHMARK(BM_SmithNormalForm)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
