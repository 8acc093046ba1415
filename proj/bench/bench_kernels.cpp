// Serial reference path versus OpenMP path for the data-parallel kernels.
#include <benchmark/benchmark.h>

#include "zerocap/behaviors.hpp"
#include "zerocap/channels.hpp"
#include "zerocap/graphs.hpp"
#include "zerocap/protocols.hpp"

namespace {

using namespace zerocap;

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_IndependenceNumber(benchmark::State& state) {
  const auto g = make_random_graph(static_cast<std::size_t>(state.range(1)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g, exec_of(state), 200));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_IndependenceNumber)->ArgsProduct({{0, 1}, {60, 90}})->Unit(benchmark::kMillisecond);

void BM_BestUnassisted(benchmark::State& state) {
  const auto c = make_Mm(static_cast<int>(state.range(1)));
  const int k = static_cast<int>(state.range(1));
  const auto prior = uniform_prior(k);
  for (auto _ : state) benchmark::DoNotOptimize(best_unassisted_success(c, k, prior, exec_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_BestUnassisted)->ArgsProduct({{0, 1}, {3}})->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const auto c = convert(make_Nm(3), NumericMode::floating);
  const auto box = convert(make_extremal_box(3, 3), NumericMode::floating);
  const auto p = make_theorem2_protocol(3);
  const auto prior = uniform_prior(2, NumericMode::floating);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo_success(c, box, p, prior, static_cast<std::uint64_t>(state.range(1)), 1,
                            exec_of(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_MonteCarlo)->ArgsProduct({{0, 1}, {1 << 20}})->Unit(benchmark::kMillisecond);

void BM_AssistedSearch(benchmark::State& state) {
  const auto c = make_Nm(2);
  const auto box = make_trivial_box();
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_assisted_search(c, box, 3, {}, exec_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_AssistedSearch)->ArgsProduct({{0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
