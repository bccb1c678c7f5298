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

#ifndef STATEFUZZ_SUT_BUILTIN_H_
#define STATEFUZZ_SUT_BUILTIN_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "statefuzz/automata/mealy_machine.h"
#include "statefuzz/sut/session.h"

namespace statefuzz::sut {

// Built-in FTP-like reference servers. All three share one alphabet and the
// states start / await-pass / logged-in / rename-pending / closed, but
// differ in a few transitions:
//
//   varB: no re-login while logged in, RNFR does not restart a rename.
//   varC: a malformed message while awaiting the password aborts login.
inline constexpr std::string_view kMalformed = "MALFORMED";

std::vector<std::string> BuiltinNames();

// Input alphabet {USER, PASS, LIST, RNFR, RNTO, QUIT, MALFORMED}.
Alphabet FtpInputs();
Alphabet FtpOutputs();

// Ground-truth transition table of a variant. Throws UnknownVariantError.
automata::MealyMachine BuiltinModel(std::string_view name);

std::unique_ptr<SutSession> OpenBuiltin(std::string_view name);

}  // namespace statefuzz::sut

#endif  // STATEFUZZ_SUT_BUILTIN_H_
