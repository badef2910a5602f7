#include <benchmark/benchmark.h>

#include "cwl/dim2.hpp"
#include "cwl/document.hpp"
#include "cwl/resolution.hpp"
#include "cwl/verify.hpp"

using namespace cwl;

namespace {

// Powers of the maximal ideal in `n` variables.
MonomialIdeal max_power(std::size_t n, long long d) {
  std::string names;
  for (std::size_t i = 0; i < n; ++i) names += " x" + std::to_string(i);
  return power(MonomialIdeal::maximal(parse("ring" + names + ";").ring), d);
}

void BM_BettiKoszul(benchmark::State& state) {
  const auto i = max_power(static_cast<std::size_t>(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(betti(i));
}
BENCHMARK(BM_BettiKoszul)->Args({2, 6})->Args({3, 3})->Args({4, 2})->Args({4, 3});

void BM_BettiLattice(benchmark::State& state) {
  const auto i = random_ideal(static_cast<std::size_t>(state.range(0)), 4, 8, 42);
  for (auto _ : state) benchmark::DoNotOptimize(betti_oracle_lcm_lattice(i));
}
BENCHMARK(BM_BettiLattice)->Arg(3)->Arg(4);

void BM_ComponentwiseLinear(benchmark::State& state) {
  const auto i = random_ideal(static_cast<std::size_t>(state.range(0)), 4, 6, 7);
  for (auto _ : state) benchmark::DoNotOptimize(is_componentwise_linear(i));
}
BENCHMARK(BM_ComponentwiseLinear)->Arg(2)->Arg(3)->Arg(4);

void BM_Ordering(benchmark::State& state) {
  const auto i = max_power(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cwl_ordering(i));
}
BENCHMARK(BM_Ordering)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateDim2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals_dim2(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateDim2)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
