#include <benchmark/benchmark.h>

#include <random>

#include "mbqc/ctc.hpp"
#include "mbqc/sim.hpp"
#include "mbqc/transforms.hpp"

using namespace mbqc;

namespace {

BitMatrix random_matrix(std::size_t n, uint32_t seed) {
  std::mt19937 rng(seed);
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1);
  return m;
}

BitMatrix random_invertible(std::size_t n, uint32_t seed) {
  std::mt19937 rng(seed);
  BitMatrix m = BitMatrix::identity(n);
  for (std::size_t step = 0; step < 4 * n; ++step) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a != b) m.xor_row_into(a, b);
  }
  return m;
}

GeneratorMatrix path_cluster(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a < n; ++a) edges.emplace_back(a, a + 1);
  return graph_state(edges, n, std::vector<MeasurementPlane>(n));
}

void bm_rank(benchmark::State& state) {
  BitMatrix m = random_matrix(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void bm_invert(benchmark::State& state) {
  BitMatrix m = random_invertible(state.range(0), 11);
  for (auto _ : state) benchmark::DoNotOptimize(invert(m));
}

void bm_derive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GeneratorMatrix g = path_cluster(n);
  for (auto _ : state) benchmark::DoNotOptimize(derive_processing(g, {1}, {n}));
}

void bm_closure(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937 rng(3);
  BitMatrix t(n, n);  // random DAG: only below-diagonal entries
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) t.set(r, c, rng() & 1);
  for (auto _ : state) benchmark::DoNotOptimize(temporal_relation(t));
}

void bm_enumerate(benchmark::State& state) {
  GeneratorMatrix g = path_cluster(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_extremal_pairs(g));
}

void bm_simulate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GeneratorMatrix g = path_cluster(n);
  ProcessingRelations p = derive_processing(g, {1}, {n});
  StateVector psi = resource_state(g);
  RunConfig cfg;
  for (int a = 0; a < n; ++a) cfg.angles.push_back(0.1 * (a + 1));
  for (auto _ : state) benchmark::DoNotOptimize(run_exact(psi, p, cfg));
}

BENCHMARK(bm_rank)->Arg(64)->Arg(256);
BENCHMARK(bm_invert)->Arg(64)->Arg(256);
BENCHMARK(bm_derive)->Arg(16)->Arg(64);
BENCHMARK(bm_closure)->Arg(64)->Arg(256);
BENCHMARK(bm_enumerate)->Arg(6)->Arg(10);
BENCHMARK(bm_simulate)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
