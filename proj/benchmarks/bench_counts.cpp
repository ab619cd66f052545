// Closed forms (O(beta) factors at growing precision) against the exact
// oracles (O(N^3) big-integer elimination, O(N^2) eigenvalue product).

#include "circtree/closed_form.hpp"
#include "circtree/graph.hpp"
#include "circtree/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace circtree;

DirectedCirculantSpec digraph(std::int64_t n) { return {5, n, 1, {1, 2}}; }
CyclePowerSpec cycle_power(std::int64_t n) { return {5, n, PowerVariant::PowerN}; }

const PrecisionBudget kWide{128, 1u << 20};

void BM_Theorem1(benchmark::State& state) {
  const auto spec = digraph(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(theorem1_count(spec, kWide));
  }
  state.counters["N"] = static_cast<double>(spec.vertex_count());
}

void BM_Betaproduct(benchmark::State& state) {
  const auto spec = digraph(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(betaproduct_count(spec, kWide));
  }
  state.counters["N"] = static_cast<double>(spec.vertex_count());
}

void BM_DigraphMatrixTree(benchmark::State& state) {
  const auto inst = reduce_to_instance(digraph(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_directed(inst));
  }
  state.counters["N"] = static_cast<double>(inst.vertex_count());
}

void BM_DigraphEigenproduct(benchmark::State& state) {
  const auto inst = reduce_to_instance(digraph(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenproduct_count(inst, kWide));
  }
  state.counters["N"] = static_cast<double>(inst.vertex_count());
}

void BM_CyclePower(benchmark::State& state) {
  const auto spec = cycle_power(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cycle_power_count(spec, kWide));
  }
  state.counters["N"] = static_cast<double>(spec.vertex_count());
}

void BM_CyclePowerMatrixTree(benchmark::State& state) {
  const auto inst = cycle_power_instance(cycle_power(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_undirected(inst));
  }
  state.counters["N"] = static_cast<double>(inst.vertex_count());
}

BENCHMARK(BM_Theorem1)->RangeMultiplier(4)->Range(4, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Betaproduct)->RangeMultiplier(4)->Range(4, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DigraphMatrixTree)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DigraphEigenproduct)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclePower)->RangeMultiplier(4)->Range(4, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclePowerMatrixTree)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
