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

#ifndef STATEFUZZ_FUZZ_CAMPAIGN_H_
#define STATEFUZZ_FUZZ_CAMPAIGN_H_

#include <vector>

#include "statefuzz/automata/mealy_machine.h"
#include "statefuzz/automata/trace.h"
#include "statefuzz/fuzz/mutator.h"
#include "statefuzz/sut/session.h"

namespace statefuzz::fuzz {

// Black-box stateful fuzzing loop. Seeds are first executed unmutated; each
// iteration then picks a queue entry, mutates it and runs it. A trace whose
// output word has a prefix never seen before joins the queue. Transport
// failures are logged as aborted entries and the campaign goes on.
//
// With config.jobs > 1 the iterations are split into contiguous shards, each
// run by its own worker with a private session from `factory` and a private
// random stream; shards are concatenated in worker order, so the log depends
// only on (seed, config, seeds, SUT).
automata::TraceLog FuzzCampaign(const sut::SessionFactory& factory,
                                const std::vector<Word>& seeds, const FuzzConfig& config,
                                automata::TraceSource source = automata::TraceSource::kFuzz);

// Single-session convenience; ignores config.jobs.
automata::TraceLog FuzzCampaign(sut::SutSession& session, const std::vector<Word>& seeds,
                                const FuzzConfig& config,
                                automata::TraceSource source = automata::TraceSource::kFuzz);

// Shortest access sequence for every state of `model`, in state order.
std::vector<Word> ModelGuidedTraces(const automata::MealyMachine& model);

}  // namespace statefuzz::fuzz

#endif  // STATEFUZZ_FUZZ_CAMPAIGN_H_
