// Serial reference vs OpenMP kernel for the three hot paths. The
// parallel variants must win only wall time; outputs are bit-identical
// (enforced by the test suite, not here).

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "crscore/candidates.hpp"
#include "crscore/distribution.hpp"
#include "crscore/propriety.hpp"
#include "crscore/score.hpp"
#include "crscore/sim.hpp"
#include "crscore/types.hpp"

namespace {

crscore::CompetingRisksDistribution wide_truth() {
  // deterministic 6x3 grid with all cells positive
  const int t_max = 6;
  const int m = 3;
  std::mt19937_64 rng(12345);
  std::exponential_distribution<double> exp_draw(1.0);
  std::vector<double> cells(static_cast<std::size_t>(m) * t_max + 1);
  double total = 0.0;
  for (double& v : cells) {
    v = 0.2 + exp_draw(rng);
    total += v;
  }
  for (double& v : cells) {
    v /= total;
  }
  const double tail = cells.back();
  cells.pop_back();
  return crscore::CompetingRisksDistribution(crscore::TimeGrid(t_max), m,
                                             std::move(cells), tail);
}

crscore::CensoringDistribution wide_censoring() {
  const int t_max = 6;
  std::vector<double> mass(t_max, 1.0 / t_max);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < mass.size(); ++i) {
    total += mass[i];
  }
  mass.back() = 1.0 - total;
  return crscore::CensoringDistribution(crscore::TimeGrid(t_max),
                                        std::move(mass));
}

const crscore::Dataset& big_dataset() {
  static const crscore::Dataset data =
      crscore::simulate_dataset_serial(wide_truth(), wide_censoring(),
                                       1000000, 7);
  return data;
}

void bm_score_serial(benchmark::State& state) {
  const auto model = wide_truth();
  const auto& data = big_dataset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(crscore::mean_score_serial(data, model));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(data.size()));
}

void bm_score_parallel(benchmark::State& state) {
  const auto model = wide_truth();
  const auto& data = big_dataset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(crscore::mean_score(data, model));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(data.size()));
}

void bm_simulate_serial(benchmark::State& state) {
  const auto truth = wide_truth();
  const auto censoring = wide_censoring();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crscore::simulate_dataset_serial(truth, censoring, 1000000, 11));
  }
  state.SetItemsProcessed(state.iterations() * 1000000);
}

void bm_simulate_parallel(benchmark::State& state) {
  const auto truth = wide_truth();
  const auto censoring = wide_censoring();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crscore::simulate_dataset(truth, censoring, 1000000, 11));
  }
  state.SetItemsProcessed(state.iterations() * 1000000);
}

void bm_propriety_serial(benchmark::State& state) {
  const auto truth = wide_truth();
  const auto censoring = wide_censoring();
  const auto candidates = crscore::make_candidates(truth, 200, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crscore::check_propriety_serial(truth, censoring, candidates));
  }
  state.SetItemsProcessed(state.iterations() * 200);
}

void bm_propriety_parallel(benchmark::State& state) {
  const auto truth = wide_truth();
  const auto censoring = wide_censoring();
  const auto candidates = crscore::make_candidates(truth, 200, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crscore::check_propriety(truth, censoring, candidates));
  }
  state.SetItemsProcessed(state.iterations() * 200);
}

BENCHMARK(bm_score_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_score_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_simulate_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_simulate_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_propriety_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_propriety_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
