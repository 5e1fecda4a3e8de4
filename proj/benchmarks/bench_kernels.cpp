#include "griemlab/connections.hpp"
#include "griemlab/frame.hpp"
#include "griemlab/verifier.hpp"
#include "griemlab/zoo.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace griemlab;

ChartManifold zoo(const char* spec) { return build_zoo(parse_zoo_spec(spec)); }

void BM_MakeFrameS6(benchmark::State& state) {
  const ChartManifold m = zoo("zoo:s6_nearly_kahler");
  const auto pts = m.sample_points(16, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(make_frame(m, pts[i++ % pts.size()]));
}
BENCHMARK(BM_MakeFrameS6);

void BM_NkTorsionS6(benchmark::State& state) {
  const ChartManifold m = zoo("zoo:s6_nearly_kahler");
  const PointFrame f = make_frame(m, m.sample_points(1, 1).front());
  for (auto _ : state) benchmark::DoNotOptimize(nk_torsion(f));
}
BENCHMARK(BM_NkTorsionS6);

void BM_Conn2Residual(benchmark::State& state) {
  const ChartManifold m = zoo("zoo:s6_nearly_kahler");
  const PointFrame f = make_frame(m, m.sample_points(1, 1).front());
  const Tensor3 t = nk_torsion(f).components;
  for (auto _ : state) benchmark::DoNotOptimize(residual_conn2(f, t));
}
BENCHMARK(BM_Conn2Residual);

void BM_NijenhuisWeightedProduct(benchmark::State& state) {
  const ChartManifold m = zoo("zoo:weighted_product?factors=s6,s2&lambda=1,4");
  const PointFrame f = make_frame(m, m.sample_points(1, 1).front());
  for (auto _ : state) benchmark::DoNotOptimize(nijenhuis_form(f));
}
BENCHMARK(BM_NijenhuisWeightedProduct);

void BM_SpectrumWeightedProduct(benchmark::State& state) {
  const ChartManifold m = zoo("zoo:weighted_product?factors=s6,s2&lambda=1,4");
  const PointFrame f = make_frame(m, m.sample_points(1, 1).front());
  for (auto _ : state) benchmark::DoNotOptimize(g_selfadjoint_spectrum(f.g, f.Q));
}
BENCHMARK(BM_SpectrumWeightedProduct);

void BM_SuiteEigenDistributions(benchmark::State& state) {
  const ChartManifold m = zoo("zoo:weighted_product?factors=s6,s2&lambda=1,4");
  RunOptions opts;
  opts.points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(m, "eigen-distributions", opts));
}
BENCHMARK(BM_SuiteEigenDistributions)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
