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

#ifndef STATEFUZZ_ANALYSIS_COVERAGE_H_
#define STATEFUZZ_ANALYSIS_COVERAGE_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "statefuzz/automata/mealy_machine.h"
#include "statefuzz/automata/trace.h"

namespace statefuzz::analysis {

using automata::MealyMachine;
using automata::StateId;
using automata::TraceLog;

// State and transition coverage of a trace log, measured by replaying the
// logged inputs through a reference model.
struct CoverageReport {
  std::string model_id;
  std::size_t states_total = 0;
  std::size_t states_visited = 0;
  std::size_t transitions_total = 0;
  std::size_t transitions_visited = 0;
  // Steps taken from each state (every state has a key).
  std::map<StateId, std::uint64_t> per_state_hits;
  std::vector<StateId> visited_states;  // ascending
  std::uint64_t divergent_steps = 0;
  std::uint64_t total_steps = 0;  // all steps in the log
  std::uint64_t traces = 0;

  double state_fraction() const;
  double transition_fraction() const;
};

// Each trace is replayed from the initial state. A state counts as visited
// once occupied (the initial state as soon as the log has an entry); a
// transition once taken. A step whose input is unknown to the model or whose
// logged output differs from the model's ends that trace's replay and
// counts as divergent.
CoverageReport Coverage(const MealyMachine& model, const TraceLog& log,
                        std::string model_id = "model");

std::string ToJson(const CoverageReport& report);
std::string ToText(const CoverageReport& report);
// Visited states filled, hit counts in node labels.
std::string ToAnnotatedDot(const MealyMachine& model, const CoverageReport& report);

enum class Verdict { kFirstWins, kSecondWins, kTie };

struct FuzzerComparison {
  CoverageReport first;
  CoverageReport second;
  Verdict verdict = Verdict::kTie;
};

// More visited states wins; ties go to more visited transitions, then to
// fewer total steps.
FuzzerComparison CompareFuzzers(const MealyMachine& model, const TraceLog& first,
                                const TraceLog& second);
Verdict CompareReports(const CoverageReport& first, const CoverageReport& second);

}  // namespace statefuzz::analysis

#endif  // STATEFUZZ_ANALYSIS_COVERAGE_H_
