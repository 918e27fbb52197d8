// Copyright 2026 The Collatz Models Authors
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

#include "collatz/verify.hpp"

namespace {

collatz::VerifyOptions single_worker() {
  collatz::VerifyOptions o;
  o.workers = 1;
  return o;
}

void BM_VerifyClaim(benchmark::State& state, const char* id, int hi) {
  const auto opts = single_worker();
  for (auto _ : state) benchmark::DoNotOptimize(collatz::verify_claim(id, 1, hi, opts));
  state.SetItemsProcessed(state.iterations() * hi);
}
BENCHMARK_CAPTURE(BM_VerifyClaim, succession, "T.succ1", 1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyClaim, lemma_10_11, "L4.10-11", 1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyClaim, append_reduction, "T.2app", 200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyClaim, descending, "T.descending", 1000)->Unit(benchmark::kMillisecond);

void BM_VerifyNineCluster(benchmark::State& state) {
  const auto opts = single_worker();
  for (auto _ : state) {
    benchmark::DoNotOptimize(collatz::verify_cluster(collatz::ClusterShape::nine, 0, state.range(0), opts));
  }
}
BENCHMARK(BM_VerifyNineCluster)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
