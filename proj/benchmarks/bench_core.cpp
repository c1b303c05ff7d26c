#include <benchmark/benchmark.h>

#include "corelimit/distributions.hpp"
#include "corelimit/enumeration.hpp"
#include "corelimit/normal_approx.hpp"
#include "corelimit/sampling.hpp"

using namespace corelimit;

namespace {

void BM_EnumerateAll(benchmark::State& state) {
  const unsigned s = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(s));
}
BENCHMARK(BM_EnumerateAll)->Arg(12)->Arg(16)->Arg(20);

void BM_GaussianBinomial(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_binomial(n, n / 3));
}
BENCHMARK(BM_GaussianBinomial)->Arg(40)->Arg(80)->Arg(160);

void BM_MixtureDistribution(benchmark::State& state) {
  const unsigned s = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mixture_distribution(s));
}
BENCHMARK(BM_MixtureDistribution)->Arg(40)->Arg(80)->Arg(120)->Arg(200);

void BM_KolmogorovDistance(benchmark::State& state) {
  const unsigned s = static_cast<unsigned>(state.range(0));
  const SizeDistribution d = mixture_distribution(s);
  for (auto _ : state) benchmark::DoNotOptimize(kolmogorov_statistic(d));
}
BENCHMARK(BM_KolmogorovDistance)->Arg(40)->Arg(120);

void BM_RealRootsCheck(benchmark::State& state) {
  const unsigned s = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(real_roots_check(s));
}
BENCHMARK(BM_RealRootsCheck)->Arg(20)->Arg(40)->Arg(60);

void BM_SampleCore(benchmark::State& state) {
  const unsigned s = static_cast<unsigned>(state.range(0));
  const CoreSampler sampler(s);
  Rng rng(17);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(rng));
}
BENCHMARK(BM_SampleCore)->Arg(30)->Arg(100);

}  // namespace
