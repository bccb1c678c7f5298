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

#ifndef STATEFUZZ_AUTOMATA_EQUIVALENCE_H_
#define STATEFUZZ_AUTOMATA_EQUIVALENCE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "statefuzz/automata/mealy_machine.h"

namespace statefuzz::automata {

struct EquivalenceResult {
  // Present iff the machines are distinguished.
  std::optional<Word> witness;

  bool equivalent() const { return !witness.has_value(); }
};

// Breadth-first search of the synchronous product. The witness is a shortest
// distinguishing input word, lexicographically least in `a`'s input order.
// Throws AlphabetMismatchError unless both input alphabets hold the same set.
EquivalenceResult CheckEquivalence(const MealyMachine& a,
                                   const MealyMachine& b);

// Product BFS restricted to `over` (a subset of both input alphabets).
// Returns up to `limit` disagreeing words, shortest first, at most one per
// product state. Outputs are compared by symbol name.
std::vector<Word> FindDisagreements(const MealyMachine& a,
                                    const MealyMachine& b,
                                    const Alphabet& over, std::size_t limit);

}  // namespace statefuzz::automata

#endif  // STATEFUZZ_AUTOMATA_EQUIVALENCE_H_
