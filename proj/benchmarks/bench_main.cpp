#include <benchmark/benchmark.h>

#include <vector>

#include "fidres/corrfid.hpp"
#include "fidres/decision.hpp"
#include "fidres/gamma_scale.hpp"
#include "fidres/rng.hpp"
#include "fidres/specfun.hpp"

namespace {

using namespace fidres;

void BM_Gauss2F1(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::gauss_2f1(1.5, -0.5, 5.5, z));
}
BENCHMARK(BM_Gauss2F1)->Arg(300)->Arg(800)->Arg(995);

void BM_CorrelationDensity(benchmark::State& state) {
  const CorrelationFiducial fid(0.98489289089060653, 3.0);
  double rho = -0.999;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fid.density(rho));
    rho += 0.001;
    if (rho > 0.999) rho = -0.999;
  }
}
BENCHMARK(BM_CorrelationDensity);

void BM_CorrelationCdf(benchmark::State& state) {
  const CorrelationFiducial fid(0.5, 9.0);
  for (auto _ : state) benchmark::DoNotOptimize(fid.cdf(0.5));
}
BENCHMARK(BM_CorrelationCdf);

void BM_ElfvingSample(benchmark::State& state) {
  const CorrelationFiducial fid(0.5, 9.0);
  RngStream rng(7, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(fid.sample(rng, static_cast<std::size_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ElfvingSample)->Arg(1000);

void BM_FiducialRiskGamma(benchmark::State& state) {
  const GammaScaleModel m{5, 2.0, 1.3};
  FiducialSampler s;
  s.draw = [m](RngStream& rng) { return fiducial_sample(m, rng, 1)[0]; };
  RngStream rng(7, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(fiducial_risk(
        s, 1.3, LossKind::scale_invariant_sq,
        static_cast<std::size_t>(state.range(0)), rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FiducialRiskGamma)->Arg(10000);

void BM_NormalDraw(benchmark::State& state) {
  RngStream rng(7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rng.normal());
}
BENCHMARK(BM_NormalDraw);

}  // namespace

BENCHMARK_MAIN();
