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

#ifndef STATEFUZZ_ACTIVE_EQUIVALENCE_ORACLE_H_
#define STATEFUZZ_ACTIVE_EQUIVALENCE_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "statefuzz/active/query_cache.h"
#include "statefuzz/automata/mealy_machine.h"

namespace statefuzz::active {

enum class EquivalenceMode { kRandomWalk, kWMethod, kExhaustive };

std::string_view ToString(EquivalenceMode mode);
// Accepts "random-walk", "w-method", "exhaustive"; throws ConfigError.
EquivalenceMode EquivalenceModeFromString(std::string_view text);

// Upper bound on the number of test words a conformance run may generate.
inline constexpr std::uint64_t kTestWordBudget = 1'000'000;

struct EquivalenceConfig {
  EquivalenceMode mode = EquivalenceMode::kWMethod;
  // Extra middle length for the W-method; maximum word length for
  // exhaustive mode.
  unsigned depth_bound = 2;
  unsigned walk_count = 1000;
  unsigned walk_length = 20;
  std::uint64_t seed = 0;

  // Throws ConfigError.
  void Validate() const;
};

// Searches for an input word on which the SUT and `hypothesis` disagree and
// returns its shortest disagreeing prefix.
//
// Exhaustive mode tries every word up to depth_bound in length-then-
// lexicographic order and throws ConfigError when |A|^depth exceeds the
// budget. The W-method tries access sequence · middle (length <= depth) ·
// separating suffix, and falls back to random walks when the number of test
// words would exceed the budget.
std::optional<Word> FindCounterexample(QueryCache& oracle,
                                       const automata::MealyMachine& hypothesis,
                                       const EquivalenceConfig& config);

std::optional<Word> FindCounterexample(sut::SutSession& sut,
                                       const automata::MealyMachine& hypothesis,
                                       const EquivalenceConfig& config);

// Shortest separating word for every pair of distinct states, deduplicated,
// in discovery order.
std::vector<Word> SeparatingSequences(const automata::MealyMachine& machine);

}  // namespace statefuzz::active

#endif  // STATEFUZZ_ACTIVE_EQUIVALENCE_ORACLE_H_
