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

#include "statefuzz/automata/serialization.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "statefuzz/errors.h"

namespace statefuzz::automata {
namespace {

using Json = nlohmann::ordered_json;

std::string DotEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string DotQuote(std::string_view text) { return "\"" + DotEscape(text) + "\""; }

const Json& Field(const Json& object, const char* name, const std::string& where) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw SchemaError("model-json: missing field '" + std::string(name) + "' in " + where);
  }
  return *it;
}

std::int64_t IntField(const Json& object, const char* name, const std::string& where) {
  const Json& value = Field(object, name, where);
  if (!value.is_number_integer()) {
    throw SchemaError("model-json: field '" + where + "." + name + "' must be an integer");
  }
  return value.get<std::int64_t>();
}

Symbol SymbolAt(const Json& value, const std::string& where) {
  if (!value.is_string()) {
    throw SchemaError("model-json: '" + where + "' must be a string");
  }
  try {
    return Symbol(value.get<std::string>());
  } catch (const InvalidSymbolError& e) {
    throw SchemaError("model-json: '" + where + "': " + e.what());
  }
}

Alphabet AlphabetField(const Json& root, const char* name) {
  const Json& array = Field(root, name, "model");
  if (!array.is_array()) {
    throw SchemaError("model-json: field '" + std::string(name) + "' must be an array");
  }
  Alphabet alphabet;
  for (std::size_t i = 0; i < array.size(); ++i) {
    const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
    Symbol symbol = SymbolAt(array[i], where);
    if (alphabet.Contains(symbol)) {
      throw SchemaError("model-json: duplicate symbol '" + symbol.name() + "' at " + where);
    }
    alphabet.Add(symbol);
  }
  return alphabet;
}

StateId StateIndex(std::int64_t value, const std::string& where) {
  if (value < 0 || value > std::numeric_limits<StateId>::max()) {
    throw SchemaError("model-json: '" + where + "' is not a valid state index");
  }
  return static_cast<StateId>(value);
}

}  // namespace

std::string Serialize(const MealyMachine& machine, ModelFormat format) {
  return format == ModelFormat::kDot ? ToDot(machine) : ToModelJson(machine);
}

std::string ToModelJson(const MealyMachine& machine) {
  Json root;
  Json inputs = Json::array();
  for (const Symbol& s : machine.inputs()) inputs.push_back(s.name());
  Json outputs = Json::array();
  for (const Symbol& s : machine.outputs()) outputs.push_back(s.name());
  root["input_alphabet"] = std::move(inputs);
  root["output_alphabet"] = std::move(outputs);
  root["state_count"] = machine.state_count();
  root["initial_state"] = machine.initial_state();
  Json transitions = Json::array();
  for (const Edge& e : machine.Edges()) {
    Json t;
    t["from"] = e.from;
    t["input"] = e.input.name();
    t["to"] = e.to;
    t["output"] = e.output.name();
    transitions.push_back(std::move(t));
  }
  root["transitions"] = std::move(transitions);
  return root.dump(2) + "\n";
}

std::string ToDot(const MealyMachine& machine, const DotStyle& style) {
  std::ostringstream out;
  out << "digraph mealy {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  __start [shape=point, style=invis];\n";
  for (StateId s = 0; s < machine.state_count(); ++s) {
    std::string label = std::to_string(s);
    if (auto it = style.state_labels.find(s); it != style.state_labels.end()) {
      label += "\\n" + DotEscape(it->second);  // DOT line break
    }
    out << "  " << s << " [label=\"" << label << "\"";
    if (auto it = style.filled.find(s); it != style.filled.end() && it->second) {
      out << ", style=filled, fillcolor=lightblue";
    }
    out << "];\n";
  }
  out << "  __start -> " << machine.initial_state() << ";\n";
  for (const Edge& e : machine.Edges()) {
    out << "  " << e.from << " -> " << e.to << " [label="
        << DotQuote(e.input.name() + " / " + e.output.name()) << "];\n";
  }
  out << "}\n";
  return out.str();
}

MealyMachine ParseModelJson(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Report a line number alongside the byte offset nlohmann gives us.
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + offset, '\n');
    throw SchemaError("model-json: malformed JSON near line " + std::to_string(line) +
                      ": " + e.what());
  }
  if (!root.is_object()) throw SchemaError("model-json: top level must be an object");

  Alphabet inputs = AlphabetField(root, "input_alphabet");
  Alphabet outputs = AlphabetField(root, "output_alphabet");
  const std::int64_t state_count = IntField(root, "state_count", "model");
  if (state_count <= 0) throw SchemaError("model-json: 'state_count' must be positive");
  const StateId initial = StateIndex(IntField(root, "initial_state", "model"), "initial_state");
  if (initial >= state_count) {
    throw SchemaError("model-json: 'initial_state' out of range");
  }
  if (inputs.empty()) throw SchemaError("model-json: 'input_alphabet' must not be empty");

  const Json& transitions = Field(root, "transitions", "model");
  if (!transitions.is_array()) {
    throw SchemaError("model-json: field 'transitions' must be an array");
  }
  std::vector<Edge> edges;
  edges.reserve(transitions.size());
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const std::string where = "transitions[" + std::to_string(i) + "]";
    const Json& t = transitions[i];
    if (!t.is_object()) throw SchemaError("model-json: '" + where + "' must be an object");
    Edge e{StateIndex(IntField(t, "from", where), where + ".from"),
           SymbolAt(Field(t, "input", where), where + ".input"),
           StateIndex(IntField(t, "to", where), where + ".to"),
           SymbolAt(Field(t, "output", where), where + ".output")};
    if (e.from >= state_count || e.to >= state_count) {
      throw SchemaError("model-json: '" + where + "' references a state outside 0.." +
                        std::to_string(state_count - 1));
    }
    if (!inputs.Contains(e.input)) {
      throw SchemaError("model-json: '" + where + ".input' symbol '" + e.input.name() +
                        "' is not in input_alphabet");
    }
    if (!outputs.Contains(e.output)) {
      throw SchemaError("model-json: '" + where + ".output' symbol '" + e.output.name() +
                        "' is not in output_alphabet");
    }
    edges.push_back(std::move(e));
  }
  return MealyMachine::FromEdges(std::move(inputs), std::move(outputs),
                                 static_cast<std::size_t>(state_count), initial, edges);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("failed writing '" + path + "'");
}

MealyMachine ReadModelFile(const std::string& path) {
  return ParseModelJson(ReadTextFile(path));
}

}  // namespace statefuzz::automata
