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

#ifndef STATEFUZZ_AUTOMATA_SERIALIZATION_H_
#define STATEFUZZ_AUTOMATA_SERIALIZATION_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "statefuzz/automata/mealy_machine.h"

namespace statefuzz::automata {

enum class ModelFormat { kModelJson, kDot };

// Extra per-state decoration for DOT output.
struct DotStyle {
  std::map<StateId, std::string> state_labels;
  std::map<StateId, bool> filled;
};

std::string Serialize(const MealyMachine& machine, ModelFormat format);

// model-json: {input_alphabet, output_alphabet, state_count, initial_state,
// transitions: [{from, input, to, output}]}, transitions sorted by
// (from, input order). Pretty-printed with a trailing newline.
std::string ToModelJson(const MealyMachine& machine);

std::string ToDot(const MealyMachine& machine, const DotStyle& style = {});

// Throws SchemaError (with field context, or line/column for malformed
// JSON), DeterminismError, CompletenessError.
MealyMachine ParseModelJson(std::string_view text);

MealyMachine ReadModelFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);
std::string ReadTextFile(const std::string& path);

}  // namespace statefuzz::automata

#endif  // STATEFUZZ_AUTOMATA_SERIALIZATION_H_
