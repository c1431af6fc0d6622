#include <benchmark/benchmark.h>

#include "edskit/eds.hpp"
#include "edskit/graph.hpp"
#include "edskit/graph6.hpp"
#include "edskit/harness.hpp"
#include "edskit/mwis.hpp"
#include "edskit/patterns.hpp"

using namespace edskit;

namespace {

Graph class_member(int n, std::uint64_t seed) {
  static const std::vector<Pattern> klass = {pattern_by_name("P6"),
                                             pattern_by_name("banner")};
  return make_f_free(random_graph(n, 0.05, seed), klass, seed + 1);
}

void BM_DistanceMatrix(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(g));
}
BENCHMARK(BM_DistanceMatrix)->Arg(16)->Arg(40)->Arg(64);

void BM_Square(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 12);
  for (auto _ : state) benchmark::DoNotOptimize(square(g));
}
BENCHMARK(BM_Square)->Arg(16)->Arg(40)->Arg(64);

void BM_FindInducedP6(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.1, 13);
  const Pattern& p6 = pattern_by_name("P6");
  for (auto _ : state) benchmark::DoNotOptimize(find_induced(g, p6));
}
BENCHMARK(BM_FindInducedP6)->Arg(16)->Arg(40)->Arg(64);

void BM_ClassRepair(benchmark::State& state) {
  static const std::vector<Pattern> klass = {pattern_by_name("P6"),
                                             pattern_by_name("banner")};
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.05, 14);
  for (auto _ : state) benchmark::DoNotOptimize(make_f_free(g, klass, 15));
}
BENCHMARK(BM_ClassRepair)->Arg(24)->Arg(40);

void BM_MwisOnSquare(benchmark::State& state) {
  const Graph g = class_member(static_cast<int>(state.range(0)), 16);
  const Graph sq = square(g);
  const WeightVector w = domination_weights(g);
  for (auto _ : state) benchmark::DoNotOptimize(mwis_exact(sq, w));
}
BENCHMARK(BM_MwisOnSquare)->Arg(24)->Arg(40);

void BM_EdsPipeline(benchmark::State& state) {
  const Graph g = class_member(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(eds_via_square(g));
}
BENCHMARK(BM_EdsPipeline)->Arg(24)->Arg(40);

void BM_EdsBruteForce(benchmark::State& state) {
  const Graph g = class_member(static_cast<int>(state.range(0)), 18);
  for (auto _ : state) benchmark::DoNotOptimize(eds_brute_force(g));
}
BENCHMARK(BM_EdsBruteForce)->Arg(16)->Arg(24);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 19);
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(emit_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(40)->Arg(62);

}  // namespace

BENCHMARK_MAIN();
