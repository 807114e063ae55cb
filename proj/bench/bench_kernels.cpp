// OpenMP kernels against their serial references on the same inputs.
//
//   bench_kernels [--benchmark_filter=...]
//
// Thread count follows OMP_NUM_THREADS.

#include "helly/complex.hpp"
#include "helly/experiment.hpp"
#include "helly/generators.hpp"
#include "helly/helly.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace helly;

namespace {

Instance wide_family(std::size_t n, int d) {
  GenSpec spec;
  spec.d = d;
  spec.n = n;
  spec.points_per_level = {8};
  spec.max_width = 7;
  spec.seed = 1;
  return gen_instance(spec);
}

Guards roomy() {
  Guards g;
  g.nerve_sets = 32;
  g.collapse_faces = std::size_t{1} << 24;
  return g;
}

void BM_nerve(benchmark::State& state) {
  const auto inst = wide_family(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(nerve(inst.sets, roomy()));
}

void BM_nerve_serial(benchmark::State& state) {
  const auto inst = wide_family(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(nerve_serial(inst.sets, roomy()));
}

void BM_max_intersecting(benchmark::State& state) {
  const auto inst = wide_family(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(max_intersecting_subfamily(inst.sets));
}

void BM_max_intersecting_serial(benchmark::State& state) {
  const auto inst = wide_family(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(max_intersecting_subfamily_serial(inst.sets));
}

// A whole suite with the default team, then pinned to one thread.
void BM_suite(benchmark::State& state, const char* suite, bool serial) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = 200;
  const int threads = omp_get_max_threads();
  if (serial) omp_set_num_threads(1);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
  omp_set_num_threads(threads);
}

}  // namespace

BENCHMARK(BM_nerve)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_nerve_serial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_intersecting)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_intersecting_serial)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_suite, collapse_omp, "collapse", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_suite, collapse_serial, "collapse", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_suite, fractional_omp, "fractional", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_suite, fractional_serial, "fractional", true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
