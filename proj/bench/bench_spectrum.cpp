#include <benchmark/benchmark.h>

#include "subgauss/directional.hpp"
#include "subgauss/fixtures.hpp"
#include "subgauss/hypergraph.hpp"

namespace {

using namespace subgauss;

struct SpectrumCase {
  RandomVector X;
  Direction theta;
  SubsetMeasure m;
};

SpectrumCase make_case(int n) {
  FixtureRng rng(7);
  return {random_random_vector(rng, n, 32), random_direction(rng, n),
          SubsetMeasure::exact(n, 0.4)};
}

void BM_spectrum_parallel(benchmark::State& state) {
  const SpectrumCase c = make_case(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(subvector_spectrum(c.X, c.theta, c.m));
  }
}

void BM_spectrum_serial(benchmark::State& state) {
  const SpectrumCase c = make_case(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(subvector_spectrum_serial(c.X, c.theta, c.m));
  }
}

void BM_psi2_table_parallel(benchmark::State& state) {
  FixtureRng rng(11);
  const int n = static_cast<int>(state.range(0));
  const Hypergraph W = random_hypergraph(rng, n, 2);
  const RandomVector X = random_random_vector(rng, n, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi2_table(X, W));
  }
}

void BM_psi2_table_serial(benchmark::State& state) {
  FixtureRng rng(11);
  const int n = static_cast<int>(state.range(0));
  const Hypergraph W = random_hypergraph(rng, n, 2);
  const RandomVector X = random_random_vector(rng, n, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi2_table_serial(X, W));
  }
}

BENCHMARK(BM_spectrum_parallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectrum_serial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_psi2_table_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_psi2_table_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
