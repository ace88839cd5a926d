#include <benchmark/benchmark.h>

#include <limits>
#include <numeric>

#include "infoclust/brute.hpp"
#include "infoclust/hypergraph.hpp"
#include "infoclust/kernels.hpp"
#include "infoclust/psp.hpp"

using namespace infoclust;

namespace {

std::shared_ptr<HypergraphOracle> instance(std::size_t m) {
  return hypergraph_entropy(random_hypergraph(m, 7, 3 * m));
}

template <class Fn>
void tabulate(benchmark::State& state, Fn fn) {
  const auto h = instance(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fn(*h));
  state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << state.range(0)));
}

template <class Fn>
void pinned_min(benchmark::State& state, Fn fn) {
  const std::size_t m = std::size_t(state.range(0));
  const auto h = instance(m);
  std::vector<std::size_t> universe(m);
  std::iota(universe.begin(), universe.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(fn(*h, universe, 0, 1e-9));
}

template <class Fn>
void partitions(benchmark::State& state, Fn fn) {
  const std::size_t m = std::size_t(state.range(0));
  const auto table = kernels::tabulate_serial(*instance(m));
  const kernels::PartitionObjective objective = [&](const kernels::MaskPartition& p) {
    if (p.size() < 2) return std::numeric_limits<double>::infinity();
    double s = -table.back();
    for (auto mask : p) s += table[mask];
    return s / double(p.size() - 1);
  };
  for (auto _ : state) benchmark::DoNotOptimize(fn(m, objective, 1e-9));
  state.SetItemsProcessed(state.iterations() * std::int64_t(bell_number(m)));
}

template <class Fn>
void local_check(benchmark::State& state, Fn fn) {
  const std::size_t m = std::size_t(state.range(0));
  const auto table = kernels::tabulate_serial(*instance(m));
  for (auto _ : state) benchmark::DoNotOptimize(fn(m, table, 1e-9, 16));
}

}  // namespace

BENCHMARK_CAPTURE(tabulate, serial, kernels::tabulate_serial)->DenseRange(12, 18, 3);
BENCHMARK_CAPTURE(tabulate, parallel, kernels::tabulate_parallel)->DenseRange(12, 18, 3);
BENCHMARK_CAPTURE(pinned_min, serial, kernels::exhaustive_pinned_min_serial)->DenseRange(12, 16, 2);
BENCHMARK_CAPTURE(pinned_min, parallel, kernels::exhaustive_pinned_min_parallel)->DenseRange(12, 16, 2);
BENCHMARK_CAPTURE(partitions, serial, kernels::min_over_partitions_serial)->DenseRange(8, 10, 1);
BENCHMARK_CAPTURE(partitions, parallel, kernels::min_over_partitions_parallel)->DenseRange(8, 10, 1);
BENCHMARK_CAPTURE(local_check, serial, kernels::local_submodularity_serial)->DenseRange(10, 14, 2);
BENCHMARK_CAPTURE(local_check, parallel, kernels::local_submodularity_parallel)->DenseRange(10, 14, 2);

BENCHMARK_MAIN();
