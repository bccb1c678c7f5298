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

#ifndef STATEFUZZ_AUTOMATA_MEALY_MACHINE_H_
#define STATEFUZZ_AUTOMATA_MEALY_MACHINE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "statefuzz/automata/symbol.h"

namespace statefuzz::automata {

using StateId = std::uint32_t;

struct Transition {
  StateId target = 0;
  std::size_t output = 0;  // index into the output alphabet

  friend bool operator==(const Transition&, const Transition&) = default;
};

// A transition written with symbol names, as it appears in model files.
struct Edge {
  StateId from = 0;
  Symbol input;
  StateId to = 0;
  Symbol output;
};

// Deterministic, complete Mealy machine. Immutable after construction.
//
// Construction prunes states unreachable from the initial state and
// renumbers the rest in breadth-first order (inputs explored in alphabet
// order), so the initial state is always 0 and two isomorphic machines over
// the same alphabets have identical tables.
class MealyMachine {
 public:
  // `table` holds state_count * inputs.size() transitions laid out row-major
  // by (state, input index). Throws InvalidMachineError on bad indices.
  MealyMachine(Alphabet inputs, Alphabet outputs, std::size_t state_count,
               StateId initial_state, std::vector<Transition> table);

  // Builds from named edges. Throws DeterminismError on a repeated
  // (state, input), CompletenessError on a missing one, UnknownSymbolError
  // for symbols outside the alphabets.
  static MealyMachine FromEdges(Alphabet inputs, Alphabet outputs,
                                std::size_t state_count, StateId initial_state,
                                std::span<const Edge> edges);

  const Alphabet& inputs() const { return inputs_; }
  const Alphabet& outputs() const { return outputs_; }
  std::size_t state_count() const { return state_count_; }
  StateId initial_state() const { return 0; }
  std::size_t transition_count() const { return table_.size(); }

  const Transition& transition(StateId state, std::size_t input) const {
    return table_[state * inputs_.size() + input];
  }
  StateId Next(StateId state, std::size_t input) const {
    return transition(state, input).target;
  }
  const Symbol& OutputOf(StateId state, std::size_t input) const {
    return outputs_[transition(state, input).output];
  }

  // Outputs produced by walking `word` from the initial state.
  // Throws UnknownSymbolError for symbols outside the input alphabet.
  Word Run(std::span<const Symbol> word) const;
  StateId StateAfter(std::span<const Symbol> word) const;

  // Named edges sorted by (from, input alphabet order).
  std::vector<Edge> Edges() const;

 private:
  Alphabet inputs_;
  Alphabet outputs_;
  std::size_t state_count_ = 0;
  std::vector<Transition> table_;
};

// Shortest access sequence of every state, indexed by state id. Ties are
// broken by input alphabet order.
std::vector<Word> AccessSequences(const MealyMachine& machine);

// Drops every input not in `keep` (which must be a subset of the machine's
// inputs) and prunes what becomes unreachable. The result uses `keep`'s order.
MealyMachine Restrict(const MealyMachine& machine, const Alphabet& keep);

}  // namespace statefuzz::automata

#endif  // STATEFUZZ_AUTOMATA_MEALY_MACHINE_H_
