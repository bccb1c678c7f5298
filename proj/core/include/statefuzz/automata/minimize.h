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

#ifndef STATEFUZZ_AUTOMATA_MINIMIZE_H_
#define STATEFUZZ_AUTOMATA_MINIMIZE_H_

#include "statefuzz/automata/mealy_machine.h"

namespace statefuzz::automata {

// Minimal output-equivalent machine. Hopcroft-style partition refinement
// starting from the partition by output row.
MealyMachine Minimize(const MealyMachine& machine);

}  // namespace statefuzz::automata

#endif  // STATEFUZZ_AUTOMATA_MINIMIZE_H_
