// Copyright 2026 The renner-hecke Authors
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
//
// Serial reference vs OpenMP sweeps for the two table builders.

#include <benchmark/benchmark.h>

#include "renner/catalog.hpp"
#include "renner/hecke.hpp"
#include "renner/oracle.hpp"

namespace {
  using namespace renner;

  void hecke_table(benchmark::State& state, bool parallel) {
    RennerMonoid const m(rook_data(static_cast<std::size_t>(state.range(0))));
    HeckeAlgebra const H(m);
    auto const         elements = m.enumerate().elements;
    for (auto _ : state) {
      auto table = parallel ? H.structure_constants(elements) : H.structure_constants_serial(elements);
      benchmark::DoNotOptimize(table);
    }
    state.counters["cells"] = static_cast<double>(elements.size() * elements.size());
  }

  void iwahori_table(benchmark::State& state, bool parallel) {
    auto const               n = static_cast<std::size_t>(state.range(0));
    auto const               p = static_cast<unsigned>(state.range(1));
    FiniteMatrixMonoid const mm(n, p);
    RennerMonoid const       rook(rook_data(n));
    auto const               bd = bruhat_decompose(mm, rook);
    for (auto _ : state) {
      auto table = parallel ? iwahori_structure_constants(mm, rook, bd)
                            : iwahori_structure_constants_serial(mm, rook, bd);
      benchmark::DoNotOptimize(table);
    }
  }

  void BM_HeckeSerial(benchmark::State& state) {
    hecke_table(state, false);
  }
  void BM_HeckeParallel(benchmark::State& state) {
    hecke_table(state, true);
  }
  void BM_IwahoriSerial(benchmark::State& state) {
    iwahori_table(state, false);
  }
  void BM_IwahoriParallel(benchmark::State& state) {
    iwahori_table(state, true);
  }
}  // namespace

BENCHMARK(BM_HeckeSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HeckeParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IwahoriSerial)->Args({2, 3})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IwahoriParallel)->Args({2, 3})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
