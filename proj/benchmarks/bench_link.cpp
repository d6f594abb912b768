#include <benchmark/benchmark.h>

#include "cvrep/optimizer.hpp"
#include "cvrep/oracle.hpp"

using namespace cvrep;

static void BM_LinkMetricsN1(benchmark::State& state) {
  const EcParams p{0.01, 0.1,
                   AmplifierModel::scissors(1, gain_tuned(0.01, 0.1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(link_metrics(p));
  }
}
BENCHMARK(BM_LinkMetricsN1);

static void BM_LinkMetricsN3(benchmark::State& state) {
  const EcParams p{0.1, 0.2,
                   AmplifierModel::scissors(3, gain_tuned(0.1, 0.2))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(link_metrics(p));
  }
}
BENCHMARK(BM_LinkMetricsN3);

static void BM_MaxFidelityTwoLinks(benchmark::State& state) {
  const AmplifierModel model = AmplifierModel::scissors(2, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_fidelity_two_links(0.05, model));
  }
}
BENCHMARK(BM_MaxFidelityTwoLinks);

static void BM_SimulateLink(benchmark::State& state) {
  const EcParams p{0.01, 0.1,
                   AmplifierModel::scissors(2, gain_tuned(0.01, 0.1))};
  const oracle::Complex alpha{0.5, 0.0};
  const oracle::Complex beta{0.3, -0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::simulate_link(p, alpha, beta, 60));
  }
}
BENCHMARK(BM_SimulateLink);

static void BM_QuadratureMetrics(benchmark::State& state) {
  const EcParams p{0.25, 0.3, AmplifierModel::scissors(1, 2.0)};
  oracle::QuadratureGrid grid;
  grid.points_per_axis = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::quadrature_metrics(p, {0.0, 0.0}, grid));
  }
}
BENCHMARK(BM_QuadratureMetrics)->Arg(101)->Arg(201);

BENCHMARK_MAIN();
