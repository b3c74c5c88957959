#include <benchmark/benchmark.h>

#include "wedge/core.hpp"
#include "wedge/gtd.hpp"
#include "wedge/series.hpp"
#include "wedge/sommerfeld.hpp"
#include "wedge/specfun.hpp"

namespace {

const wedge::WedgeProblem& prob() {
  static wedge::WedgeProblem p(7 * wedge::pi / 8, 0.3 * wedge::pi, 5.0,
                               wedge::Bc::Dirichlet);
  return p;
}

void BM_SpectralS(benchmark::State& state) {
  const wedge::complex z{0.4, 0.3};
  for (auto _ : state)
    benchmark::DoNotOptimize(wedge::core::spectral_s(z, prob()));
}
BENCHMARK(BM_SpectralS);

void BM_PhiDiffSdc(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        wedge::sommerfeld::phi_diff_sdc({1.0, 0.4}, prob()));
}
BENCHMARK(BM_PhiDiffSdc);

void BM_PhiSeries(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wedge::series::phi_series({1.0, 0.4}, prob()));
}
BENCHMARK(BM_PhiSeries);

void BM_PhiUtd(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wedge::gtd::phi_utd({1.0, 0.4}, prob()));
}
BENCHMARK(BM_PhiUtd);

void BM_FresnelF(benchmark::State& state) {
  double v = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge::specfun::fresnel_f(v));
    v = (v < 8.0) ? v + 0.37 : 0.1;
  }
}
BENCHMARK(BM_FresnelF);

}  // namespace

BENCHMARK_MAIN();
