// Serial reference vs OpenMP kernels on whole-group sweeps.
#include <benchmark/benchmark.h>

#include "permlab/bijections.hpp"
#include "permlab/kernels.hpp"
#include "permlab/statistics.hpp"

using namespace permlab;

namespace
{

template <bool Parallel>
void BM_lexc_histogram(benchmark::State &state)
{
  int const n = static_cast<int>(state.range(0));
  int const d = static_cast<int>(state.range(1));
  auto const spec = GroupSpec::unsigned_colors(n, d);
  auto const order = color_major_order(n, d);
  kernels::StatFn const f = [&](const ColoredPerm &p) { return lexc(p, order); };
  for (auto _ : state) {
    auto h = Parallel ? kernels::histogram_parallel(spec, f) : kernels::histogram_serial(spec, f);
    benchmark::DoNotOptimize(h.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * group_order(spec)));
  state.counters["threads"] = Parallel ? kernels::thread_count() : 1;
}

template <bool Parallel>
void BM_min_one_scan(benchmark::State &state)
{
  int const n = static_cast<int>(state.range(0));
  int const d = static_cast<int>(state.range(1));
  auto const spec = GroupSpec::unsigned_colors(n, d);
  auto const order = min_one_order(n, d);
  kernels::Predicate const holds = [&](const ColoredPerm &p) {
    return ldes(gamma_min_one(p), order) == lexc(p, order);
  };
  for (auto _ : state) {
    auto s = Parallel ? kernels::scan_parallel(spec, holds) : kernels::scan_serial(spec, holds);
    benchmark::DoNotOptimize(s.examined);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * group_order(spec)));
}

template <bool Parallel>
void BM_des_b_histogram(benchmark::State &state)
{
  auto const spec = GroupSpec::signed_colors(static_cast<int>(state.range(0)), 1);
  kernels::StatFn const f = [](const ColoredPerm &p) { return des_b(p); };
  for (auto _ : state) {
    auto h = Parallel ? kernels::histogram_parallel(spec, f) : kernels::histogram_serial(spec, f);
    benchmark::DoNotOptimize(h.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * group_order(spec)));
}

} // namespace

BENCHMARK(BM_lexc_histogram<false>)->Args({7, 1})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lexc_histogram<true>)->Args({7, 1})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_one_scan<false>)->Args({6, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_one_scan<true>)->Args({6, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_des_b_histogram<false>)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_des_b_histogram<true>)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
