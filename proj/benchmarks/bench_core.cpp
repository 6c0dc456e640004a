#include <benchmark/benchmark.h>

#include "cbend/cbend.hpp"

using namespace cbend;

namespace {

Decoration sample_decoration(const Triangulation& t) {
  Decoration d(t.edges.size());
  for (std::size_t e = 0; e < d.size(); ++e) d[e] = std::polar(0.6 + 0.1 * static_cast<double>(e % 9), 0.3 * e);
  return d;
}

void BM_GenerateSurface(benchmark::State& s) {
  const int g = static_cast<int>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(generate_surface(g, 2));
}
BENCHMARK(BM_GenerateSurface)->Arg(1)->Arg(4)->Arg(16);

void BM_Classify(benchmark::State& s) {
  const Isometry g = compose(loxodromic_D(std::polar(1.7, 0.4)), compose(elementary_E(), translation_T(0.3, 1.0)));
  for (auto _ : s) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify);

void BM_SurfaceGroupHolonomy(benchmark::State& s) {
  const Triangulation t = generate_surface(static_cast<int>(s.range(0)), 2);
  const Representation rep(t, sample_decoration(t));
  for (auto _ : s) benchmark::DoNotOptimize(surface_group_holonomy(rep).relator_residual);
}
BENCHMARK(BM_SurfaceGroupHolonomy)->Arg(1)->Arg(4)->Arg(8);

void BM_Develop(benchmark::State& s) {
  const Triangulation t = generate_surface(2, 2);
  const Representation rep(t, sample_decoration(t));
  const int depth = static_cast<int>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(develop(rep, depth).nodes.size());
  s.SetItemsProcessed(s.iterations() * developed_count(depth));
}
BENCHMARK(BM_Develop)->Arg(4)->Arg(8)->Arg(10);

void BM_Certify(benchmark::State& s) {
  const auto grid = log_grid(0.25, 4.0, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(certify(0.7, grid, grid).min_re);
}
BENCHMARK(BM_Certify)->Arg(5)->Arg(20);

}  // namespace
BENCHMARK_MAIN();
