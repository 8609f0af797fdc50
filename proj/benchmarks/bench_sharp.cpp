#include <benchmark/benchmark.h>

#include "sharp/boolean.hpp"
#include "sharp/constructions.hpp"
#include "sharp/fixtures.hpp"
#include "sharp/generators.hpp"
#include "sharp/hocolim.hpp"
#include "sharp/homology.hpp"
#include "sharp/lifting.hpp"
#include "sharp/sharp.hpp"
#include "sharp/simplicial_object.hpp"

using namespace sharp;

static void BM_HomologyProductOfCircles(benchmark::State& state) {
  auto x = fixtures::circle();
  for (int k = 1; k < state.range(0); ++k) x = product(x, fixtures::circle()).object();
  for (auto _ : state) benchmark::DoNotOptimize(homology(x));
  state.counters["nondegenerate"] = static_cast<double>(x.records().size());
}
BENCHMARK(BM_HomologyProductOfCircles)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_StandardSimplexHomology(benchmark::State& state) {
  const auto x = standard_simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology(x));
}
BENCHMARK(BM_StandardSimplexHomology)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

static void BM_IsSharpProjection(benchmark::State& state) {
  const auto f = product(fixtures::circle(), standard_simplex(static_cast<int>(state.range(0)))).second();
  for (auto _ : state) benchmark::DoNotOptimize(is_sharp(f));
}
BENCHMARK(BM_IsSharpProjection)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_HornLifts(benchmark::State& state) {
  const auto f = product(fixtures::two_points(), standard_simplex(2)).second();
  for (auto _ : state) benchmark::DoNotOptimize(has_horn_lifts(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HornLifts)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_HocolimSphereSpan(benchmark::State& state) {
  const auto d = fixtures::sphere_span();
  for (auto _ : state) benchmark::DoNotOptimize(hocolim(d));
}
BENCHMARK(BM_HocolimSphereSpan)->Unit(benchmark::kMillisecond);

static void BM_DiagonalFiltration(benchmark::State& state) {
  const auto h = hocolim(fixtures::suspension_span());
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_filtration(h.replacement().object(), h.bound()));
}
BENCHMARK(BM_DiagonalFiltration)->Unit(benchmark::kMillisecond);

static void BM_DistributiveLaw(benchmark::State& state) {
  gen::Rng rng(1);
  std::vector<gen::DistributiveInstance> xs;
  for (int k = 0; k < 32; ++k) xs.push_back(gen::distributive_instance(rng, 4, 2));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = xs[i++ % xs.size()];
    benchmark::DoNotOptimize(verify_distributive_law(x.diagram, x.colimit, x.a));
  }
}
BENCHMARK(BM_DistributiveLaw)->Unit(benchmark::kMicrosecond);

static void BM_Sheafify(benchmark::State& state) {
  gen::Rng rng(7);
  std::vector<BooleanPresheaf> xs;
  for (int k = 0; k < 16; ++k) xs.push_back(gen::boolean_presheaf(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sheafify(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Sheafify)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
