#include <benchmark/benchmark.h>

#include "patternforge/detectors.hpp"
#include "patternforge/generators.hpp"
#include "patternforge/harness.hpp"
#include "patternforge/minors.hpp"
#include "patternforge/reductions.hpp"

namespace {

// Times one registered detector on c4free hosts (absent answers force full work).
void run_detector(benchmark::State& state, const char* name, const char* model) {
  const pf::DetectorEntry* d = pf::find_detector(name);
  pf::Graph g = pf::generate_model(model, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(d->run(g, pf::DetectOptions{0}));
  state.counters["m"] = static_cast<double>(g.m());
  state.SetComplexityN(state.range(0));
}

void BM_noninduced_c4(benchmark::State& s) { run_detector(s, "noninduced_c4", "c4free"); }
void BM_c4_or_triangle(benchmark::State& s) { run_detector(s, "c4_or_triangle", "c4free"); }
void BM_c4_or_diamond(benchmark::State& s) { run_detector(s, "c4_or_diamond", "c4free"); }
void BM_c4_or_k4(benchmark::State& s) { run_detector(s, "c4_or_k4", "c4free"); }
void BM_c4_or_paw(benchmark::State& s) { run_detector(s, "c4_or_paw", "c4free"); }
void BM_c4_or_coclaw(benchmark::State& s) { run_detector(s, "c4_or_coclaw", "c4free"); }
void BM_k4_or_i4(benchmark::State& s) { run_detector(s, "k4_or_i4", "sparse:4"); }

void BM_psi_reduction(benchmark::State& state) {
  pf::Pattern h = pf::catalog_lookup("co-C6");
  auto mf = pf::max_clique_minor(h).witness;
  pf::Graph g = pf::gnp(static_cast<int>(state.range(0)), 0.1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pf::build_psi_reduction(g, h, mf));
  state.SetComplexityN(state.range(0));
}

void BM_max_clique_minor(benchmark::State& state) {
  pf::Pattern h = pf::catalog_lookup("co-C", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pf::max_clique_minor(h));
}

}  // namespace

BENCHMARK(BM_noninduced_c4)->RangeMultiplier(2)->Range(1000, 4000)->Complexity();
BENCHMARK(BM_c4_or_triangle)->RangeMultiplier(2)->Range(1000, 4000)->Complexity();
BENCHMARK(BM_c4_or_diamond)->RangeMultiplier(2)->Range(1000, 4000)->Complexity();
BENCHMARK(BM_c4_or_k4)->RangeMultiplier(2)->Range(1000, 4000)->Complexity();
BENCHMARK(BM_c4_or_paw)->RangeMultiplier(2)->Range(1000, 4000)->Complexity();
BENCHMARK(BM_c4_or_coclaw)->RangeMultiplier(2)->Range(1000, 4000)->Complexity();
BENCHMARK(BM_k4_or_i4)->RangeMultiplier(10)->Range(100, 100000)->Complexity();
BENCHMARK(BM_psi_reduction)->RangeMultiplier(2)->Range(100, 800)->Complexity();
BENCHMARK(BM_max_clique_minor)->DenseRange(6, 10, 2);

BENCHMARK_MAIN();
