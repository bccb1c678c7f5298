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

#ifndef STATEFUZZ_ACTIVE_LEARNER_H_
#define STATEFUZZ_ACTIVE_LEARNER_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "statefuzz/active/equivalence_oracle.h"
#include "statefuzz/active/observation_table.h"
#include "statefuzz/active/query_cache.h"
#include "statefuzz/automata/mealy_machine.h"

namespace statefuzz::active {

struct RoundLog {
  std::size_t round = 0;
  std::size_t short_rows = 0;
  std::size_t boundary_rows = 0;
  std::size_t suffixes = 0;
  std::size_t hypothesis_states = 0;
  std::optional<Word> counterexample;
  QueryStats stats;
};

// One JSON object per line, no trailing newline.
std::string ToJsonLine(const RoundLog& log);

struct ActiveResult {
  automata::MealyMachine model;
  QueryStats stats;
  std::vector<RoundLog> rounds;
  ObservationTable table;
};

// Table-based active learning: fill, close, make consistent, hypothesise,
// look for a counterexample, refine; until the equivalence oracle finds none.
// `on_round` is invoked after every equivalence query.
ActiveResult LearnActive(sut::SutSession& sut, const Alphabet& alphabet,
                         const EquivalenceConfig& config,
                         const std::function<void(const RoundLog&)>& on_round = {});

}  // namespace statefuzz::active

#endif  // STATEFUZZ_ACTIVE_LEARNER_H_
