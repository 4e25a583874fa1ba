// Serial reference vs OpenMP for the three data-parallel kernels.
#include <benchmark/benchmark.h>

#include "aupc/data/sampling.hpp"
#include "aupc/data/synthetic.hpp"
#include "aupc/kernels/brush.hpp"
#include "aupc/kernels/corner.hpp"
#include "aupc/kernels/density.hpp"
#include "aupc/render/density.hpp"

using namespace aupc;

namespace {

const NormalizedDataset& data() {
  static const NormalizedDataset d = normalize(generate_synthetic(default_synthetic_spec(), 7).data);
  return d;
}

const CurveSampler& sampler() {
  static const CurveSampler s{TransformConfig{}};
  return s;
}

const Image1& field() {
  static const Image1 f = accumulate_density(data(), 0, CanvasLayout{}, TransformConfig{}).grid;
  return f;
}

// Builds the shared inputs outside the timed loops.
void warm_up() {
  data();
  sampler();
  field();
}

const BrushRegion kRect = RectRegion{0, 1.1, 1.4, 0.0, 0.5};

}  // namespace

static void BM_DensitySerial(benchmark::State& st) {
  warm_up();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::accumulate(data().data, 0, CanvasLayout{}, sampler()));
  st.SetItemsProcessed(st.iterations() * data().rows());
}
static void BM_DensityOmp(benchmark::State& st) {
  warm_up();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::omp::accumulate(data().data, 0, CanvasLayout{}, sampler()));
  st.SetItemsProcessed(st.iterations() * data().rows());
}
static void BM_CornerSerial(benchmark::State& st) {
  warm_up();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::min_eigenvalue(field(), 5));
}
static void BM_CornerOmp(benchmark::State& st) {
  warm_up();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::omp::min_eigenvalue(field(), 5));
}
static void BM_BrushSerial(benchmark::State& st) {
  warm_up();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::select(data().data, kRect, sampler()));
  st.SetItemsProcessed(st.iterations() * data().rows());
}
static void BM_BrushOmp(benchmark::State& st) {
  warm_up();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::omp::select(data().data, kRect, sampler()));
  st.SetItemsProcessed(st.iterations() * data().rows());
}

BENCHMARK(BM_DensitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DensityOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CornerSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CornerOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BrushSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BrushOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
