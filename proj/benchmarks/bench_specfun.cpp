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

#include <string>

#include "dirac1d/specfun.hpp"

namespace {

using namespace dirac1d::specfun;

// args: nu * 100, z * 100
void BM_PcfD(benchmark::State& state) {
  const PcfOrder nu(static_cast<double>(state.range(0)) / 100.0);
  double z = static_cast<double>(state.range(1)) / 100.0;
  EvalReport r;
  for (auto _ : state) {
    benchmark::DoNotOptimize(z);
    r = pcf_d(nu, z);
    benchmark::DoNotOptimize(r.value);
  }
  state.SetLabel(std::string(to_string(r.path)));
}
BENCHMARK(BM_PcfD)
    ->Args({150, 100})
    ->Args({250, 3000})
    ->Args({350, 700})
    ->Args({2050, 500})
    ->Args({12050, 300})
    ->Args({350, -900})
    ->Unit(benchmark::kMicrosecond);

void BM_Gamma(benchmark::State& state) {
  double x = -40.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma(x));
    x = x > 160.0 ? -40.3 : x + 1.37;
  }
}
BENCHMARK(BM_Gamma);

void BM_KummerM(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kummer_m(-2.3, 0.5, 4.1));
}
BENCHMARK(BM_KummerM);

void BM_Hermite250(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hermite(250, 0.7071067811865476));
}
BENCHMARK(BM_Hermite250);

}  // namespace
