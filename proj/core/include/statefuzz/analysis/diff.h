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

#ifndef STATEFUZZ_ANALYSIS_DIFF_H_
#define STATEFUZZ_ANALYSIS_DIFF_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "statefuzz/automata/mealy_machine.h"

namespace statefuzz::analysis {

using automata::Symbol;
using automata::Word;

struct Witness {
  Word inputs;
  Word outputs_a;
  Word outputs_b;
};

struct DiffReport {
  std::vector<Witness> witnesses;  // shortest first
  std::size_t states_a = 0;
  std::size_t states_b = 0;
  std::vector<Symbol> shared_inputs;
  std::vector<Symbol> only_a;  // inputs exclusive to the first machine
  std::vector<Symbol> only_b;

  bool equivalent() const { return witnesses.empty(); }
};

// Compares two models on their shared inputs. Alphabet differences are
// reported, not treated as errors.
DiffReport Diff(const automata::MealyMachine& a, const automata::MealyMachine& b,
                std::size_t max_witnesses = 5);

std::string ToJson(const DiffReport& report);
std::string ToText(const DiffReport& report);

}  // namespace statefuzz::analysis

#endif  // STATEFUZZ_ANALYSIS_DIFF_H_
