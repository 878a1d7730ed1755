#include <benchmark/benchmark.h>

#include "k3chambers/chamber_atlas.hpp"
#include "k3chambers/cross_section.hpp"
#include "k3chambers/exact_linalg.hpp"
#include "k3chambers/fourier_motzkin.hpp"
#include "k3chambers/gallery.hpp"
#include "k3chambers/zariski.hpp"

using namespace k3chambers;

static void BM_DeterminantDynkin(benchmark::State& state) {
  const RatMatrix g = dynkin_gram({AdeFamily::A, static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(determinant(g));
}
BENCHMARK(BM_DeterminantDynkin)->Arg(4)->Arg(8)->Arg(16);

static void BM_InverseNonpositiveE8(benchmark::State& state) {
  const RatMatrix g = dynkin_gram({AdeFamily::E, 8});
  for (auto _ : state) benchmark::DoNotOptimize(inverse_nonpositive_check(g));
}
BENCHMARK(BM_InverseNonpositiveE8);

static void BM_ZariskiDecomposeWitness(benchmark::State& state) {
  const SurfaceModel m = quartic_example().model;
  const DivisorClass d = DivisorClass::lattice({5, 7, 2});
  for (auto _ : state) benchmark::DoNotOptimize(zariski_decompose(m, d));
}
BENCHMARK(BM_ZariskiDecomposeWitness);

static void BM_WeylEnumeration(benchmark::State& state) {
  const SurfaceModel m = random_configuration(11, static_cast<std::size_t>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_weyl_chambers(m));
}
BENCHMARK(BM_WeylEnumeration)->Arg(3)->Arg(6)->Arg(8);

static void BM_ZariskiEnumeration(benchmark::State& state) {
  const SurfaceModel m = random_configuration(11, static_cast<std::size_t>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_zariski_chambers(m));
}
BENCHMARK(BM_ZariskiEnumeration)->Arg(3)->Arg(6)->Arg(8);

static void BM_CrossSectionQuartic(benchmark::State& state) {
  const SurfaceModel m = quartic_example().model;
  CrossSectionSpec spec = default_cross_section(m);
  spec.resolution = static_cast<std::size_t>(state.range(0));
  spec.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(classify_cross_section(m, spec));
}
BENCHMARK(BM_CrossSectionQuartic)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
