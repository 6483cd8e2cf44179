#include <benchmark/benchmark.h>

#include "atomix/atoms.hpp"
#include "atomix/characterize.hpp"
#include "atomix/dps.hpp"
#include "atomix/generators.hpp"
#include "atomix/minimize.hpp"
#include "atomix/psi.hpp"
#include "atomix/semigroup.hpp"

namespace {

using namespace atomix;

void BM_Psi(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(psi(n, n / 2));
}
BENCHMARK(BM_Psi)->Arg(10)->Arg(100)->Arg(1000);

void BM_CountTypeStates(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_type_states(n, n / 2));
}
BENCHMARK(BM_CountTypeStates)->DenseRange(6, 12, 2);

void BM_SupportAutomaton(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dfa d = gen_full_tn(n, StateSet(n, {0}));
  const StateSet s = StateSet::from_mask(n, (std::uint64_t{1} << (n / 2)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_support_automaton(d, s).size());
  state.counters["states"] = static_cast<double>(build_support_automaton(d, s).size());
}
BENCHMARK(BM_SupportAutomaton)->DenseRange(3, 9, 1);

void BM_SemigroupClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dfa d = gen_full_tn(n, StateSet(n, {0}));
  for (auto _ : state) benchmark::DoNotOptimize(semigroup_closure(d).size());
}
BENCHMARK(BM_SemigroupClosure)->DenseRange(3, 6, 1);

void BM_Minimize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dfa d = gen_random(n, 3, 17);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(d).size());
}
BENCHMARK(BM_Minimize)->RangeMultiplier(4)->Range(16, 4096);

void BM_Characterize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dfa d = gen_full_tn(n, StateSet(n, {0}));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(characterize(d, {.parallel = parallel}).consistent);
}
BENCHMARK(BM_Characterize)->ArgsProduct({{3, 4, 5}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
