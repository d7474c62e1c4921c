// Copyright 2026 The tensorcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <string>

#include "tensorcone/face_cone.hpp"
#include "tensorcone/oracle.hpp"

namespace tcone {
namespace {

const char* kTypes[] = {"A2", "B2", "G2", "A3", "B3"};

void BM_WeylGroup(benchmark::State& state) {
  const auto type = CartanType::parse(kTypes[state.range(0)]);
  for (auto _ : state) {
    WeylGroup w{RootSystem(type)};
    benchmark::DoNotOptimize(w.size());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_WeylGroup)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CupTable(benchmark::State& state) {
  const auto type = CartanType::parse(kTypes[state.range(0)]);
  WeylGroup weyl{RootSystem(type)};
  const auto borel = ParabolicSubset::borel(weyl.rank());
  for (auto _ : state) {
    SchubertCalculus sc(weyl);
    std::size_t terms = 0;
    for (const auto& u : weyl.elements()) {
      for (const auto& v : weyl.elements()) terms += sc.gb_product(u.id, v.id).size();
    }
    benchmark::DoNotOptimize(terms);
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_CupTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Theta(benchmark::State& state) {
  const auto type = CartanType::parse(kTypes[state.range(0)]);
  WeylGroup weyl{RootSystem(type)};
  SchubertCalculus sc(weyl);
  BkProduct bk(sc);
  for (auto _ : state) {
    std::size_t members = 0;
    for (const auto& p : all_parabolics(weyl.rank())) members += bk.enumerate_theta(2, p).size();
    benchmark::DoNotOptimize(members);
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_Theta)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_TensorDecompose(benchmark::State& state) {
  RootSystem rs(CartanType::parse("A2"));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RepresentationOracle oracle(rs);
    benchmark::DoNotOptimize(oracle.tensor_decompose(LatticeWeight{n, n}, LatticeWeight{n, 1}));
  }
  state.SetLabel("A2 (n,n) x (n,1)");
}
BENCHMARK(BM_TensorDecompose)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SampleCone(benchmark::State& state) {
  RootSystem rs(CartanType::parse("A2"));
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RepresentationOracle oracle(rs);
    benchmark::DoNotOptimize(oracle.sample_cone(2, 3, 2, jobs).certified.size());
  }
  state.SetLabel("A2 box 3 depth 2");
}
BENCHMARK(BM_SampleCone)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace tcone

BENCHMARK_MAIN();
