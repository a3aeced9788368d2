// Serial reference vs OpenMP kernels: one Pieri strip application and a full
// per-rank degree table.
#include <benchmark/benchmark.h>

#include <omp.h>

#include "rankproj/degrees.hpp"
#include "rankproj/kernels.hpp"

using namespace rankproj;

namespace {

std::vector<BigInt> filled(std::size_t size) {
  std::vector<BigInt> v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = static_cast<long>(i % 97) - 48;
  return v;
}

template <bool Parallel>
void BM_Strip(benchmark::State& state) {
  const auto ctx = GrassmannContext::make(static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(1)));
  const auto basis = SchubertBasis::get(ctx);
  const StripTable& table = basis->row_strip(1);
  const auto in = filled(basis->size());
  std::vector<BigInt> out(basis->size());
  for (auto _ : state) {
    for (auto& x : out) x = 0;
    if constexpr (Parallel) {
      kernels::apply_strip_parallel(table, in, out);
    } else {
      kernels::apply_strip_serial(table, in, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["basis"] = static_cast<double>(basis->size());
  state.counters["threads"] = omp_get_max_threads();
}

template <Execution Exec>
void BM_Table(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<BlockShape> shapes = {BlockShape::corner(), BlockShape::row(2)};
  for (auto _ : state) {
    auto t = degree_table(n, shapes, Exec);
    benchmark::DoNotOptimize(t.degrees.data());
  }
}

}  // namespace

BENCHMARK(BM_Strip<false>)->Args({4, 12})->Args({6, 14})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Strip<true>)->Args({4, 12})->Args({6, 14})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Table<Execution::Serial>)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Table<Execution::Parallel>)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
