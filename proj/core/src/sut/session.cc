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

#include "statefuzz/sut/session.h"

#include <utility>

namespace statefuzz::sut {

Word RunTrace(SutSession& session, std::span<const Symbol> inputs) {
  session.Reset();
  Word outputs;
  outputs.reserve(inputs.size());
  for (const Symbol& input : inputs) {
    try {
      outputs.push_back(session.Query(input));
    } catch (const TraceAbortedError&) {
      throw;
    } catch (const TransportError& e) {
      throw TraceAbortedError(std::string("trace aborted after ") +
                                  std::to_string(outputs.size()) + " steps: " + e.what(),
                              std::move(outputs));
    }
  }
  return outputs;
}

MachineSession::MachineSession(std::string name, automata::MealyMachine machine)
    : machine_(std::move(machine)),
      descriptor_{std::move(name), machine_.inputs()},
      state_(machine_.initial_state()) {}

Symbol MachineSession::Query(const Symbol& input) {
  const std::size_t a = machine_.inputs().IndexOrThrow(input, "input");
  const automata::Transition& t = machine_.transition(state_, a);
  state_ = t.target;
  return machine_.outputs()[t.output];
}

}  // namespace statefuzz::sut
