// Copyright 2026 The Aluthge Authors
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

#include "aluthge/koszul.hpp"
#include "aluthge/models.hpp"
#include "aluthge/polar.hpp"
#include "aluthge/radius.hpp"

namespace aluthge {
namespace {

CorpusEntry entry(int n, int d) {
  return random_commuting(0xbe4c4 + static_cast<std::uint64_t>(n * 8 + d), n, d,
                          CorpusStyle::kDiagonalizable);
}

void BM_SphericalPolar(benchmark::State& state) {
  const CorpusEntry e = entry(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(spherical_polar(e.tuple));
}
BENCHMARK(BM_SphericalPolar)->Args({4, 2})->Args({8, 3})->Args({16, 3});

void BM_IterationStep(benchmark::State& state) {
  const CorpusEntry e = entry(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(iteration_step(e.tuple, 0.5));
}
BENCHMARK(BM_IterationStep)->Arg(4)->Arg(8)->Arg(16);

void BM_IterateToStall(benchmark::State& state) {
  const CorpusEntry e = entry(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(iterate(e.tuple, 0.5));
}
BENCHMARK(BM_IterateToStall)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_JointEigenvalues(benchmark::State& state) {
  const CorpusEntry e = entry(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(joint_eigenvalues(e.tuple));
}
BENCHMARK(BM_JointEigenvalues)->Arg(4)->Arg(8)->Arg(16);

void BM_PowerNorms(benchmark::State& state) {
  const CorpusEntry e = entry(8, 3);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power_norms(e.tuple, k));
}
BENCHMARK(BM_PowerNorms)->Arg(10)->Arg(40);

void BM_RadiusElementary(benchmark::State& state) {
  const CorpusEntry e = entry(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(radius_elementary(e.tuple));
}
BENCHMARK(BM_RadiusElementary)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_MembershipReport(benchmark::State& state) {
  const CorpusEntry e = entry(8, static_cast<int>(state.range(0)));
  const PointCd lambda = e.spectrum.front();
  for (auto _ : state) benchmark::DoNotOptimize(membership_report(e.tuple, lambda));
}
BENCHMARK(BM_MembershipReport)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_GridScan(benchmark::State& state) {
  const CorpusEntry e = entry(6, 2);
  GridSlice slice;
  slice.fixed = PointCd::zero(2);
  slice.re_min = slice.im_min = -1.0;
  slice.re_max = slice.im_max = 1.0;
  slice.re_steps = slice.im_steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grid_scan(e.tuple, slice));
}
BENCHMARK(BM_GridScan)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace aluthge

// The packaged benchmark_main archive is LTO bytecode from another compiler.
BENCHMARK_MAIN();
