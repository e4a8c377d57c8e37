// Compares the OpenMP census kernels against the serial reference on
// generator-scale graphs.

#include <benchmark/benchmark.h>

#include "fcs/census.hpp"
#include "fcs/generators.hpp"

namespace {

fcs::TwoLayerGraph make_graph(fcs::Count n) {
  fcs::GeneratorConfig cfg;
  cfg.node_count = n;
  cfg.strong_mean_degree_range = {15, 15};
  cfg.weak_mean_degree_range = {120, 120};
  fcs::Rng rng(42);
  return fcs::generate_two_layer(cfg, rng);
}

void bm_triangle_parallel(benchmark::State& state) {
  auto g = make_graph(state.range(0));
  for (auto _ : state) {
    auto c = fcs::triangle_census(g);
    benchmark::DoNotOptimize(c);
  }
}

void bm_triangle_serial(benchmark::State& state) {
  auto g = make_graph(state.range(0));
  for (auto _ : state) {
    auto c = fcs::triangle_census_serial(g);
    benchmark::DoNotOptimize(c);
  }
}

void bm_open_triad_parallel(benchmark::State& state) {
  auto g = make_graph(state.range(0));
  for (auto _ : state) {
    auto c = fcs::open_triad_census(g);
    benchmark::DoNotOptimize(c);
  }
}

void bm_open_triad_serial(benchmark::State& state) {
  auto g = make_graph(state.range(0));
  for (auto _ : state) {
    auto c = fcs::open_triad_census_serial(g);
    benchmark::DoNotOptimize(c);
  }
}

}  // namespace

BENCHMARK(bm_triangle_parallel)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_triangle_serial)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_open_triad_parallel)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_open_triad_serial)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
