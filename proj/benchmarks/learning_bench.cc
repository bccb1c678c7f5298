// Copyright 2026 The statefuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "statefuzz/active/learner.h"
#include "statefuzz/fuzz/campaign.h"
#include "statefuzz/passive/state_merger.h"
#include "statefuzz/sut/builtin.h"

namespace {

using namespace statefuzz;

void BM_LearnActiveVarA(benchmark::State& state) {
  active::EquivalenceConfig eq;
  eq.mode = state.range(0) == 0 ? active::EquivalenceMode::kWMethod
                                : active::EquivalenceMode::kExhaustive;
  eq.depth_bound = state.range(0) == 0 ? 2 : 6;
  for (auto _ : state) {
    auto sut = sut::OpenBuiltin("varA");
    auto result = active::LearnActive(*sut, sut->descriptor().inputs, eq);
    state.counters["symbols"] = static_cast<double>(result.stats.symbols);
  }
}
BENCHMARK(BM_LearnActiveVarA)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LearnPassiveFromCampaign(benchmark::State& state) {
  auto sut = sut::OpenBuiltin("varC");
  fuzz::FuzzConfig cfg;
  cfg.seed = 5;
  cfg.iterations = static_cast<std::uint64_t>(state.range(0));
  cfg.malformed_ratio = 0.1;
  auto log = fuzz::FuzzCampaign(*sut, {}, cfg);
  for (auto _ : state) {
    auto result = passive::LearnPassive(log);
    state.counters["pta_nodes"] = static_cast<double>(result.pta_nodes);
  }
}
BENCHMARK(BM_LearnPassiveFromCampaign)->Arg(500)->Arg(2000)->Arg(8000)
    ->Unit(benchmark::kMillisecond);

}  // namespace
