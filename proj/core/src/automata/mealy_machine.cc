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

#include "statefuzz/automata/mealy_machine.h"

#include <deque>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "statefuzz/errors.h"

namespace statefuzz::automata {
namespace {

constexpr StateId kUnvisited = std::numeric_limits<StateId>::max();

}  // namespace

MealyMachine::MealyMachine(Alphabet inputs, Alphabet outputs,
                           std::size_t state_count, StateId initial_state,
                           std::vector<Transition> table)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  const std::size_t k = inputs_.size();
  if (state_count == 0) throw InvalidMachineError("machine needs at least one state");
  if (k == 0) throw InvalidMachineError("machine needs a non-empty input alphabet");
  if (initial_state >= state_count) {
    throw InvalidMachineError("initial state " + std::to_string(initial_state) +
                              " out of range");
  }
  if (table.size() != state_count * k) {
    throw InvalidMachineError("transition table has " + std::to_string(table.size()) +
                              " entries, expected " + std::to_string(state_count * k));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].target >= state_count || table[i].output >= outputs_.size()) {
      std::ostringstream msg;
      msg << "transition (" << i / k << ", " << inputs_[i % k]
          << ") has out-of-range target or output";
      throw InvalidMachineError(msg.str());
    }
  }

  // Breadth-first renumbering; also drops unreachable states.
  std::vector<StateId> renumber(state_count, kUnvisited);
  std::vector<StateId> order;
  order.reserve(state_count);
  renumber[initial_state] = 0;
  order.push_back(initial_state);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const StateId old = order[head];
    for (std::size_t a = 0; a < k; ++a) {
      const StateId next = table[old * k + a].target;
      if (renumber[next] == kUnvisited) {
        renumber[next] = static_cast<StateId>(order.size());
        order.push_back(next);
      }
    }
  }

  state_count_ = order.size();
  table_.resize(state_count_ * k);
  for (StateId s = 0; s < state_count_; ++s) {
    for (std::size_t a = 0; a < k; ++a) {
      const Transition& t = table[order[s] * k + a];
      table_[s * k + a] = Transition{renumber[t.target], t.output};
    }
  }
}

MealyMachine MealyMachine::FromEdges(Alphabet inputs, Alphabet outputs,
                                     std::size_t state_count,
                                     StateId initial_state,
                                     std::span<const Edge> edges) {
  const std::size_t k = inputs.size();
  std::vector<Transition> table(state_count * k);
  std::vector<bool> seen(state_count * k, false);
  for (const Edge& e : edges) {
    if (e.from >= state_count || e.to >= state_count) {
      std::ostringstream msg;
      msg << "transition (" << e.from << ", " << e.input << ") -> " << e.to
          << " references a state outside 0.." << state_count - 1;
      throw InvalidMachineError(msg.str());
    }
    const std::size_t a = inputs.IndexOrThrow(e.input, "input");
    const std::size_t o = outputs.IndexOrThrow(e.output, "output");
    const std::size_t slot = e.from * k + a;
    if (seen[slot]) {
      std::ostringstream msg;
      msg << "nondeterministic transition: state " << e.from << " has more than one entry for input "
          << e.input;
      throw DeterminismError(msg.str());
    }
    seen[slot] = true;
    table[slot] = Transition{e.to, o};
  }
  for (std::size_t slot = 0; slot < seen.size(); ++slot) {
    if (!seen[slot]) {
      std::ostringstream msg;
      msg << "incomplete transition map: no entry for state " << slot / k << ", input "
          << inputs[slot % k];
      throw CompletenessError(msg.str());
    }
  }
  return MealyMachine(std::move(inputs), std::move(outputs), state_count,
                      initial_state, std::move(table));
}

Word MealyMachine::Run(std::span<const Symbol> word) const {
  Word out;
  out.reserve(word.size());
  StateId state = initial_state();
  for (const Symbol& symbol : word) {
    const std::size_t a = inputs_.IndexOrThrow(symbol, "input");
    const Transition& t = transition(state, a);
    out.push_back(outputs_[t.output]);
    state = t.target;
  }
  return out;
}

StateId MealyMachine::StateAfter(std::span<const Symbol> word) const {
  StateId state = initial_state();
  for (const Symbol& symbol : word) {
    state = Next(state, inputs_.IndexOrThrow(symbol, "input"));
  }
  return state;
}

std::vector<Edge> MealyMachine::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(table_.size());
  for (StateId s = 0; s < state_count_; ++s) {
    for (std::size_t a = 0; a < inputs_.size(); ++a) {
      const Transition& t = transition(s, a);
      edges.push_back(Edge{s, inputs_[a], t.target, outputs_[t.output]});
    }
  }
  return edges;
}

std::vector<Word> AccessSequences(const MealyMachine& machine) {
  std::vector<Word> access(machine.state_count());
  std::vector<bool> reached(machine.state_count(), false);
  std::deque<StateId> queue{machine.initial_state()};
  reached[machine.initial_state()] = true;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < machine.inputs().size(); ++a) {
      const StateId next = machine.Next(s, a);
      if (reached[next]) continue;
      reached[next] = true;
      access[next] = access[s];
      access[next].push_back(machine.inputs()[a]);
      queue.push_back(next);
    }
  }
  return access;
}

MealyMachine Restrict(const MealyMachine& machine, const Alphabet& keep) {
  std::vector<std::size_t> source_index;
  source_index.reserve(keep.size());
  for (const Symbol& symbol : keep) {
    source_index.push_back(machine.inputs().IndexOrThrow(symbol, "input"));
  }
  std::vector<Transition> table;
  table.reserve(machine.state_count() * keep.size());
  for (StateId s = 0; s < machine.state_count(); ++s) {
    for (std::size_t a : source_index) table.push_back(machine.transition(s, a));
  }
  return MealyMachine(keep, machine.outputs(), machine.state_count(),
                      machine.initial_state(), std::move(table));
}

}  // namespace statefuzz::automata
