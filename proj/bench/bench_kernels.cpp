// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "apnforge/compatibility.hpp"
#include "apnforge/diffspec.hpp"

namespace {

using namespace apnforge;

BCParams bench_params(unsigned m, unsigned n) {
  const Field f = make_field(2 * m);
  return BCParams(f, m, n, find_c(CompatContext(f, m, n)).value(), default_d(f, m));
}

void BM_Spectrum(benchmark::State& state) {
  const auto p = bench_params(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(p));
}
BENCHMARK(BM_Spectrum)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SpectrumSerial(benchmark::State& state) {
  const auto p = bench_params(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_serial(p));
}
BENCHMARK(BM_SpectrumSerial)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_KernelSizes(benchmark::State& state) {
  const auto p = bench_params(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_sizes(p));
}
BENCHMARK(BM_KernelSizes)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CountCompatible(benchmark::State& state) {
  const CompatContext ctx(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_compatible(ctx));
}
BENCHMARK(BM_CountCompatible)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FindC(benchmark::State& state) {
  const CompatContext ctx(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_c(ctx));
}
BENCHMARK(BM_FindC)->Arg(6)->Arg(10)->Arg(12);

void BM_FindCSerial(benchmark::State& state) {
  const CompatContext ctx(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_c_serial(ctx));
}
BENCHMARK(BM_FindCSerial)->Arg(6)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
