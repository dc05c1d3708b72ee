// Copyright 2026 The CMS Authors
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

#include "cms/construction.hpp"
#include "cms/enumeration.hpp"
#include "cms/measures.hpp"
#include "cms/spectra.hpp"

namespace {

void BM_ConstructFrierson(benchmark::State& state) {
  const auto spec = cms::lowest_entropy_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cms::construct_frierson(spec));
  state.SetLabel("n=" + std::to_string(spec.order()));
}
BENCHMARK(BM_ConstructFrierson)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_Compound(benchmark::State& state) {
  const auto m3 = cms::catalog("m3");
  const auto t9a = cms::catalog("t9a");
  for (auto _ : state) benchmark::DoNotOptimize(cms::compound(m3, t9a, 81));
}
BENCHMARK(BM_Compound)->Unit(benchmark::kMicrosecond);

void BM_JacobiSvd(benchmark::State& state) {
  const auto m = cms::construct_frierson(
      cms::lowest_entropy_spec(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cms::jacobi_singular_values(m));
  state.SetLabel("n=" + std::to_string(m.order()));
}
BENCHMARK(BM_JacobiSvd)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_NumericProfile(benchmark::State& state) {
  const auto m = cms::catalog("browne_b27");
  for (auto _ : state) benchmark::DoNotOptimize(cms::singular_values_numeric(m));
}
BENCHMARK(BM_NumericProfile)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto spec = cms::lowest_entropy_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto p = cms::closed_form_svs(spec);
    benchmark::DoNotOptimize(cms::entropy_compression(p.sigmas, spec.order()));
  }
}
BENCHMARK(BM_ClosedForm)->DenseRange(2, 8, 2);

void BM_ClanTable(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cms::clan_table(level));
}
BENCHMARK(BM_ClanTable)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateAssignments(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    cms::for_each_assignment(level, [&](const cms::FriersonSpec&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateAssignments)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_CountingTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cms::counting_table(6));
}
BENCHMARK(BM_CountingTable);

}  // namespace

BENCHMARK_MAIN();
