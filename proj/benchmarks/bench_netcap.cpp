// Copyright 2026 netcap authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "netcap/channel.hpp"
#include "netcap/mi_estimator.hpp"
#include "netcap/mixture_density.hpp"
#include "netcap/ratio_entropy.hpp"
#include "netcap/stats.hpp"

namespace {

using namespace netcap;

void BM_MixtureLogDensity(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  std::vector<double> rows(m);
  for (auto& s : rows) s = 1.0 + 10.0 * rng.exponential();
  const GaussianMixtureDensity density(rows, 1);
  std::vector<double> scratch;
  double v = 0.0;
  for (auto _ : state) {
    v += 0.37;
    if (v > 40.0) v = 0.0;
    const auto ld = density.log_density(std::vector<double>{v}, scratch);
    benchmark::DoNotOptimize(ld.full);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m));
}
BENCHMARK(BM_MixtureLogDensity)->Range(1 << 8, 1 << 14);

void BM_ShiftedLogDensity(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  std::vector<double> rows(m);
  for (auto& s : rows) s = 1.0 + 5.0 * rng.exponential();
  const ShiftedMixtureDensity density(rows, 1);
  std::vector<double> scratch;
  const std::vector<double> offset{3.0};
  double v = 0.0;
  for (auto _ : state) {
    v += 0.37;
    if (v > 40.0) v = 0.0;
    const auto ld = density.log_density(std::vector<double>{v}, offset, scratch);
    benchmark::DoNotOptimize(ld.full);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m));
}
BENCHMARK(BM_ShiftedLogDensity)->Range(1 << 8, 1 << 14);

void BM_ChannelSample(benchmark::State& state) {
  const NetworkConfig config(AlphaSequence::exponential(0.5), 1.0, 1.0);
  const InputDistribution dist = InputDistribution::circular_gaussian(1.0);
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_channel(config, dist, rng).y);
  }
}
BENCHMARK(BM_ChannelSample);

void BM_RatioEntropyQuadrature(benchmark::State& state) {
  Rng rng(4);
  const auto sampler = [](Rng& r) { return 1.0 + r.uniform_co(); };
  const RatioLaw law = make_ratio_law(sampler, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_entropy(law));
  }
}
BENCHMARK(BM_RatioEntropyQuadrature)->Arg(1)->Arg(256)->Arg(4096);

void BM_KsTwoSample(benchmark::State& state) {
  Rng rng(5);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = rng.uniform_co();
    b[i] = rng.uniform_co();
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ks_two_sample(a, b).p_value);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_KsTwoSample)->Range(1 << 10, 1 << 17);

void BM_EstimateMi(benchmark::State& state) {
  const NetworkConfig config(AlphaSequence::exponential(0.5), 1.0, 10.0);
  const InputDistribution dist = InputDistribution::circular_gaussian(10.0);
  MiParams params;
  params.outer = static_cast<std::size_t>(state.range(0));
  params.mixture = params.outer / 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_mi(config, dist, params, Rng(6)).mi_nats);
  }
}
BENCHMARK(BM_EstimateMi)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
