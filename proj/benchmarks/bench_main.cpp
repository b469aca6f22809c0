#include <numbers>

#include <benchmark/benchmark.h>

#include "eqbif/analyzer.hpp"
#include "eqbif/euler_ring.hpp"
#include "eqbif/radial_ode.hpp"
#include "eqbif/spectrum.hpp"

namespace {

eqbif::EulerElement sample(int len) {
  std::vector<eqbif::EulerElement::Term> terms;
  terms.emplace_back(0, eqbif::BigInt(-1));
  for (int i = 1; i < len; ++i) terms.emplace_back(i, eqbif::BigInt(i % 5 - 2));
  return eqbif::EulerElement::from_terms(std::move(terms));
}

void BM_EulerMul(benchmark::State& state) {
  const auto a = sample(static_cast<int>(state.range(0)));
  const auto b = sample(static_cast<int>(state.range(0)) / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_EulerMul)->Arg(8)->Arg(64);

void BM_EulerPow(benchmark::State& state) {
  const auto a = sample(16);
  for (auto _ : state) benchmark::DoNotOptimize(pow(a, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EulerPow)->Arg(4)->Arg(16)->Arg(64);

void BM_RadialShoot(benchmark::State& state) {
  const eqbif::RadialProblem problem{3, static_cast<int>(state.range(0)), std::numbers::pi / 2};
  for (auto _ : state) benchmark::DoNotOptimize(eqbif::mode_eigenvalues(problem, 60.0));
}
BENCHMARK(BM_RadialShoot)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_HemisphereSpectrum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eqbif::hemisphere_spectrum(6, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HemisphereSpectrum)->Arg(20)->Arg(80);

void BM_CertifyUnbounded(benchmark::State& state) {
  eqbif::SystemConfig config;
  config.n = 3;
  config.p_minus = 2;
  config.p_plus = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eqbif::certify_unbounded(config, 2, eqbif::Sign::positive, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_CertifyUnbounded)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
