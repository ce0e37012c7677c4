#include <benchmark/benchmark.h>

#include "dilink/absorber.hpp"
#include "dilink/cover_connect.hpp"
#include "dilink/cycles.hpp"
#include "dilink/expansion.hpp"
#include "dilink/generators.hpp"
#include "dilink/pipeline.hpp"
#include "dilink/subdivision.hpp"

using namespace dilink;

static void BM_CertifyExact(benchmark::State& state) {
  const Digraph d = gen_random_digraph(static_cast<int>(state.range(0)), 0.8, 1);
  const ExpansionParams p{0.2, 0.25, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(certify_outexpander_exact(d, p));
}
BENCHMARK(BM_CertifyExact)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_HamiltonCycle(benchmark::State& state) {
  const Digraph d = gen_random_digraph(static_cast<int>(state.range(0)), 0.5, 2);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hamilton_cycle(d, seed++));
}
BENCHMARK(BM_HamiltonCycle)->RangeMultiplier(2)->Range(100, 800)->Unit(benchmark::kMillisecond);

static void BM_Connect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph d = gen_random_digraph(n, 0.5, 3);
  ConnectionRequest req;
  for (int i = 0; i < 10; ++i) req.terminals.push_back({2 * i, 2 * i + 1});
  req.max_order = 5;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(connect_disjoint_paths(d, req, seed++));
}
BENCHMARK(BM_Connect)->RangeMultiplier(2)->Range(100, 800)->Unit(benchmark::kMicrosecond);

static PipelineConfig config(std::uint64_t seed) {
  PipelineConfig cfg;
  cfg.gamma = 0.5;
  cfg.nu = 0.8;
  cfg.tau = 0.8;
  cfg.d = 8;
  cfg.seed = seed;
  return cfg;
}

static void BM_LinkedEmbed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph d = gen_random_digraph(n, 0.7, 4);
  const std::vector<Vertex> f{0, 1, 2};
  const std::vector<int> ls{50, 50, 50};
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(nh_linked_embed(d, directed_triangle_pattern(), f, {ls}, config(seed++)));
}
BENCHMARK(BM_LinkedEmbed)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_PerfectTiling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph d = gen_random_digraph(n, 0.7, 5);
  const std::vector<int> orders{n / 2, n - n / 2};
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(perfect_tiling(d, single_arc_pattern(), orders, config(seed++)));
}
BENCHMARK(BM_PerfectTiling)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
