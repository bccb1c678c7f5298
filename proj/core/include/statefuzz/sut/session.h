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

#ifndef STATEFUZZ_SUT_SESSION_H_
#define STATEFUZZ_SUT_SESSION_H_

#include <functional>
#include <memory>
#include <span>
#include <string>

#include "statefuzz/automata/mealy_machine.h"
#include "statefuzz/automata/symbol.h"
#include "statefuzz/errors.h"

namespace statefuzz::sut {

using automata::Alphabet;
using automata::Symbol;
using automata::Word;

class TransportError : public Error {
 public:
  using Error::Error;
};

class ConnectionRefusedError : public TransportError {
 public:
  using TransportError::TransportError;
};

// A trace could not be completed; carries what was observed before the
// failure.
class TraceAbortedError : public TransportError {
 public:
  TraceAbortedError(const std::string& what, Word partial_outputs)
      : TransportError(what), partial_outputs_(std::move(partial_outputs)) {}

  const Word& partial_outputs() const { return partial_outputs_; }

 private:
  Word partial_outputs_;
};

class UnknownVariantError : public Error {
 public:
  using Error::Error;
};

struct SutDescriptor {
  std::string name;
  Alphabet inputs;
};

// Black-box access to a system under test. After Reset() the behaviour must
// depend only on the queries that follow. A session is driven by one thread
// at a time.
class SutSession {
 public:
  virtual ~SutSession() = default;

  virtual void Reset() = 0;
  virtual Symbol Query(const Symbol& input) = 0;
  virtual const SutDescriptor& descriptor() const = 0;
};

using SessionFactory = std::function<std::unique_ptr<SutSession>()>;

// Reset, then query every input in order. Transport failures after the reset
// surface as TraceAbortedError with the partial output.
Word RunTrace(SutSession& session, std::span<const Symbol> inputs);

// In-process SUT whose behaviour is a Mealy machine.
class MachineSession : public SutSession {
 public:
  MachineSession(std::string name, automata::MealyMachine machine);

  void Reset() override { state_ = machine_.initial_state(); }
  Symbol Query(const Symbol& input) override;
  const SutDescriptor& descriptor() const override { return descriptor_; }

  const automata::MealyMachine& machine() const { return machine_; }

 private:
  automata::MealyMachine machine_;
  SutDescriptor descriptor_;
  automata::StateId state_ = 0;
};

}  // namespace statefuzz::sut

#endif  // STATEFUZZ_SUT_SESSION_H_
