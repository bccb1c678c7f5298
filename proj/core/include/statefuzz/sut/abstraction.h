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

#ifndef STATEFUZZ_SUT_ABSTRACTION_H_
#define STATEFUZZ_SUT_ABSTRACTION_H_

#include <string>
#include <string_view>
#include <vector>

#include "statefuzz/automata/symbol.h"

namespace statefuzz::sut {

using automata::Alphabet;
using automata::Symbol;

struct InputTemplate {
  Symbol symbol;
  std::string line;  // sent CRLF-terminated
};

struct OutputClassifier {
  std::string prefix;
  Symbol symbol;
};

// Maps abstract symbols to concrete protocol lines and back.
struct AbstractionConfig {
  std::vector<InputTemplate> inputs;
  std::vector<OutputClassifier> classifiers;  // first match wins
  Symbol default_output{"OTHER"};
  int timeout_ms = 1000;
  Symbol timeout_symbol{"TIMEOUT"};

  // Throws ConfigError on duplicate input symbols, empty inputs or a
  // non-positive timeout.
  void Validate() const;

  Alphabet InputAlphabet() const;
  // Throws UnknownSymbolError.
  const std::string& Render(const Symbol& input) const;
  Symbol Classify(std::string_view response_line) const;
};

// Throws ConfigError with field context.
AbstractionConfig ParseAbstractionConfig(std::string_view json_text);
AbstractionConfig ReadAbstractionConfig(const std::string& path);
std::string ToJson(const AbstractionConfig& config);

// The wire mapping spoken by BuiltinServer: USER -> "USER u", ..., and
// response classes by three-digit status prefix.
AbstractionConfig IdentityAbstraction();

}  // namespace statefuzz::sut

#endif  // STATEFUZZ_SUT_ABSTRACTION_H_
