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

#include "statefuzz/sut/builtin.h"

#include <array>
#include <utility>

namespace statefuzz::sut {
namespace {

using automata::MealyMachine;
using automata::StateId;
using automata::Transition;

enum State : StateId { kStart, kAwaitPass, kLoggedIn, kRenamePending, kClosed, kStateCount };
enum Input : std::size_t { kUser, kPass, kList, kRnfr, kRnto, kQuit, kBad, kInputCount };
enum Output : std::size_t {
  k220, k331, k230, k150, k250, k350, k503, k530, k500, k221, k421
};

class TableBuilder {
 public:
  TableBuilder() : table_(std::size_t{kStateCount} * kInputCount) {}

  TableBuilder& Row(State s, State next, Output out) {
    for (std::size_t a = 0; a < kInputCount; ++a) Set(s, static_cast<Input>(a), next, out);
    return *this;
  }
  TableBuilder& Set(State s, Input a, State next, Output out) {
    table_[std::size_t{s} * kInputCount + a] = Transition{next, out};
    return *this;
  }
  MealyMachine Build() && {
    return MealyMachine(FtpInputs(), FtpOutputs(), kStateCount, kStart, std::move(table_));
  }

 private:
  std::vector<Transition> table_;
};

TableBuilder VariantA() {
  TableBuilder t;
  t.Row(kStart, kStart, k530)
      .Set(kStart, kUser, kAwaitPass, k331)
      .Set(kStart, kQuit, kClosed, k221)
      .Set(kStart, kBad, kStart, k500);
  t.Row(kAwaitPass, kAwaitPass, k530)
      .Set(kAwaitPass, kPass, kLoggedIn, k230)
      .Set(kAwaitPass, kUser, kAwaitPass, k331)
      .Set(kAwaitPass, kQuit, kClosed, k221)
      .Set(kAwaitPass, kBad, kAwaitPass, k500);
  t.Set(kLoggedIn, kList, kLoggedIn, k150)
      .Set(kLoggedIn, kRnfr, kRenamePending, k350)
      .Set(kLoggedIn, kRnto, kLoggedIn, k503)
      .Set(kLoggedIn, kUser, kAwaitPass, k331)
      .Set(kLoggedIn, kPass, kLoggedIn, k503)
      .Set(kLoggedIn, kQuit, kClosed, k221)
      .Set(kLoggedIn, kBad, kLoggedIn, k500);
  t.Row(kRenamePending, kLoggedIn, k503)
      .Set(kRenamePending, kRnto, kLoggedIn, k250)
      .Set(kRenamePending, kRnfr, kRenamePending, k350)
      .Set(kRenamePending, kQuit, kClosed, k221)
      .Set(kRenamePending, kBad, kLoggedIn, k500);
  t.Row(kClosed, kClosed, k421);
  return t;
}

}  // namespace

std::vector<std::string> BuiltinNames() { return {"varA", "varB", "varC"}; }

Alphabet FtpInputs() {
  return Alphabet{"USER", "PASS", "LIST", "RNFR", "RNTO", "QUIT", kMalformed};
}

Alphabet FtpOutputs() {
  return Alphabet{"R220", "R331", "R230", "R150", "R250", "R350",
                  "R503", "R530", "R500", "R221", "R421"};
}

MealyMachine BuiltinModel(std::string_view name) {
  if (name == "varA") return VariantA().Build();
  if (name == "varB") {
    TableBuilder t = VariantA();
    t.Set(kLoggedIn, kUser, kLoggedIn, k503).Set(kRenamePending, kRnfr, kLoggedIn, k503);
    return std::move(t).Build();
  }
  if (name == "varC") {
    TableBuilder t = VariantA();
    t.Set(kAwaitPass, kBad, kStart, k500);
    return std::move(t).Build();
  }
  std::string valid;
  for (const auto& n : BuiltinNames()) valid += (valid.empty() ? "" : ", ") + n;
  throw UnknownVariantError("unknown builtin SUT '" + std::string(name) +
                            "'; valid names: " + valid);
}

std::unique_ptr<SutSession> OpenBuiltin(std::string_view name) {
  return std::make_unique<MachineSession>(std::string(name), BuiltinModel(name));
}

}  // namespace statefuzz::sut
