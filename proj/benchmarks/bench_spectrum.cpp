// Copyright 2026 The dirac1d Authors.
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

#include "dirac1d/model.hpp"
#include "dirac1d/oracle.hpp"
#include "dirac1d/quantize.hpp"

namespace {

using namespace dirac1d;

constexpr double kAlphaHalf = 0.7071067811865476;

// arg: alpha * 100
void BM_Spectrum4(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(quantize::spectrum(alpha, 4));
}
BENCHMARK(BM_Spectrum4)->Arg(0)->Arg(71)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_HermiteCheck250(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quantize::hermite_check(kAlphaHalf, 250));
}
BENCHMARK(BM_HermiteCheck250)->Unit(benchmark::kMicrosecond);

void BM_OracleFirstLevels(benchmark::State& state) {
  const auto p = model::PotentialParams::from_alpha(kAlphaHalf);
  const auto cfg = oracle::ShootingConfig::defaults(p);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::first_levels(p, 4, cfg));
}
BENCHMARK(BM_OracleFirstLevels)->Unit(benchmark::kMillisecond);

// arg: level index
void BM_Normalize(benchmark::State& state) {
  const auto p = model::PotentialParams::from_alpha(kAlphaHalf);
  const auto roots = quantize::spectrum(kAlphaHalf, 4);
  const auto& root = roots[static_cast<std::size_t>(state.range(0))];
  const auto c = model::assemble_coefficients(p, root, model::EnergySign::Positive);
  const double w = model::default_halfwidth(p, root.nu);
  for (auto _ : state) benchmark::DoNotOptimize(model::normalize(p, c, root, w));
}
BENCHMARK(BM_Normalize)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
