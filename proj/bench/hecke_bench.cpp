// Serial reference vs OpenMP schedules for the coset BFS and the elementary
// box search, and the fixed-width reduction kernel vs the exact one.

#include <benchmark/benchmark.h>

#include <random>

#include "hecke/kernels.hpp"
#include "hecke/normalizer.hpp"

using namespace hecke;

namespace {

const RingElt L = RingElt::lambda();

Schedule schedule_of(const benchmark::State& state) {
  return state.range(1) != 0 ? Schedule::Parallel : Schedule::Serial;
}

void BM_CosetTable(benchmark::State& state) {
  const RingElt tau(state.range(0));
  const Schedule s = schedule_of(state);
  std::size_t size = 0;
  for (auto _ : state) {
    CosetTable t = coset_table(tau, kDefaultCosetBound, s);
    size = t.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["cosets"] = static_cast<double>(size);
  state.SetLabel(s == Schedule::Parallel ? "parallel" : "serial");
}
BENCHMARK(BM_CosetTable)
    ->ArgsProduct({{16, 48, 80}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_BoxSearch(benchmark::State& state) {
  const long bound = state.range(0);
  const Schedule s = schedule_of(state);
  for (auto _ : state) {
    auto w = kernel::elementary_box_search(RingElt(4), bound, s);
    benchmark::DoNotOptimize(w);
  }
  state.SetLabel(s == Schedule::Parallel ? "parallel" : "serial");
}
BENCHMARK(BM_BoxSearch)->ArgsProduct({{6, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

std::vector<std::pair<kernel::SmallElt, kernel::SmallElt>> reduction_inputs() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(-40, 40);
  std::vector<std::pair<kernel::SmallElt, kernel::SmallElt>> out;
  while (out.size() < 1000) {
    kernel::SmallElt x{d(rng), d(rng)}, y{d(rng), d(rng)};
    if (y.a == 0 && y.b == 0) continue;
    RingElt bx(Integer(static_cast<long>(x.a)), Integer(static_cast<long>(x.b)));
    RingElt by(Integer(static_cast<long>(y.a)), Integer(static_cast<long>(y.b)));
    if (bx.is_zero() || !is_unit(gcd(bx, by))) continue;
    out.emplace_back(x, y);
  }
  return out;
}

void BM_ReductionKernel(benchmark::State& state) {
  auto inputs = reduction_inputs();
  for (auto _ : state) {
    long sum = 0;
    for (const auto& [x, y] : inputs) sum += kernel::small_reduced_factor(x, y)->e;
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs.size()));
}
BENCHMARK(BM_ReductionKernel)->Unit(benchmark::kMicrosecond);

void BM_ReductionExact(benchmark::State& state) {
  std::vector<std::pair<RingElt, RingElt>> inputs;
  for (const auto& [x, y] : reduction_inputs()) {
    inputs.emplace_back(RingElt(Integer(static_cast<long>(x.a)), Integer(static_cast<long>(x.b))),
                        RingElt(Integer(static_cast<long>(y.a)), Integer(static_cast<long>(y.b))));
  }
  for (auto _ : state) {
    long sum = 0;
    for (const auto& [x, y] : inputs) sum += reduced_factor(x, y).e;
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs.size()));
}
BENCHMARK(BM_ReductionExact)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
