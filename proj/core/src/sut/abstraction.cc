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

#include "statefuzz/sut/abstraction.h"

#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "statefuzz/automata/serialization.h"
#include "statefuzz/errors.h"

namespace statefuzz::sut {
namespace {

using Json = nlohmann::ordered_json;

std::string StringField(const Json& object, const char* name, const std::string& where) {
  auto it = object.find(name);
  if (it == object.end() || !it->is_string()) {
    throw ConfigError("abstraction config: '" + where + "." + name +
                      "' must be a string");
  }
  return it->get<std::string>();
}

Symbol SymbolField(const Json& object, const char* name, const std::string& where) {
  try {
    return Symbol(StringField(object, name, where));
  } catch (const InvalidSymbolError& e) {
    throw ConfigError("abstraction config: '" + where + "." + name + "': " + e.what());
  }
}

const Json& ArrayField(const Json& root, const char* name) {
  auto it = root.find(name);
  if (it == root.end() || !it->is_array()) {
    throw ConfigError(std::string("abstraction config: '") + name + "' must be an array");
  }
  return *it;
}

}  // namespace

void AbstractionConfig::Validate() const {
  if (inputs.empty()) throw ConfigError("abstraction config: no input templates");
  std::unordered_set<std::string> seen;
  for (const auto& t : inputs) {
    if (!seen.insert(t.symbol.name()).second) {
      throw ConfigError("abstraction config: duplicate input symbol '" + t.symbol.name() + "'");
    }
    if (t.line.find_first_of("\r\n") != std::string::npos) {
      throw ConfigError("abstraction config: template for '" + t.symbol.name() +
                        "' must be a single line");
    }
  }
  if (timeout_ms <= 0) throw ConfigError("abstraction config: timeout_ms must be positive");
}

Alphabet AbstractionConfig::InputAlphabet() const {
  Alphabet alphabet;
  for (const auto& t : inputs) alphabet.Add(t.symbol);
  return alphabet;
}

const std::string& AbstractionConfig::Render(const Symbol& input) const {
  for (const auto& t : inputs) {
    if (t.symbol == input) return t.line;
  }
  throw UnknownSymbolError("no template for input symbol '" + input.name() + "'");
}

Symbol AbstractionConfig::Classify(std::string_view response_line) const {
  for (const auto& c : classifiers) {
    if (response_line.starts_with(c.prefix)) return c.symbol;
  }
  return default_output;
}

AbstractionConfig ParseAbstractionConfig(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text.begin(), json_text.end());
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("abstraction config: malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("abstraction config: top level must be an object");

  AbstractionConfig config;
  const Json& inputs = ArrayField(root, "inputs");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::string where = "inputs[" + std::to_string(i) + "]";
    config.inputs.push_back(InputTemplate{SymbolField(inputs[i], "symbol", where),
                                          StringField(inputs[i], "template", where)});
  }
  if (root.contains("classifiers")) {
    const Json& classifiers = ArrayField(root, "classifiers");
    for (std::size_t i = 0; i < classifiers.size(); ++i) {
      const std::string where = "classifiers[" + std::to_string(i) + "]";
      config.classifiers.push_back(OutputClassifier{
          StringField(classifiers[i], "prefix", where),
          SymbolField(classifiers[i], "symbol", where)});
    }
  }
  if (root.contains("default_output")) {
    config.default_output = SymbolField(root, "default_output", "config");
  }
  if (root.contains("timeout_symbol")) {
    config.timeout_symbol = SymbolField(root, "timeout_symbol", "config");
  }
  if (root.contains("timeout_ms")) {
    const Json& t = root["timeout_ms"];
    if (!t.is_number_integer()) throw ConfigError("abstraction config: 'timeout_ms' must be an integer");
    config.timeout_ms = t.get<int>();
  }
  config.Validate();
  return config;
}

AbstractionConfig ReadAbstractionConfig(const std::string& path) {
  return ParseAbstractionConfig(automata::ReadTextFile(path));
}

std::string ToJson(const AbstractionConfig& config) {
  Json root;
  Json inputs = Json::array();
  for (const auto& t : config.inputs) {
    inputs.push_back(Json{{"symbol", t.symbol.name()}, {"template", t.line}});
  }
  Json classifiers = Json::array();
  for (const auto& c : config.classifiers) {
    classifiers.push_back(Json{{"prefix", c.prefix}, {"symbol", c.symbol.name()}});
  }
  root["inputs"] = std::move(inputs);
  root["classifiers"] = std::move(classifiers);
  root["default_output"] = config.default_output.name();
  root["timeout_ms"] = config.timeout_ms;
  root["timeout_symbol"] = config.timeout_symbol.name();
  return root.dump(2) + "\n";
}

AbstractionConfig IdentityAbstraction() {
  AbstractionConfig config;
  const std::pair<const char*, const char*> templates[] = {
      {"USER", "USER u"}, {"PASS", "PASS p"}, {"LIST", "LIST"},     {"RNFR", "RNFR a"},
      {"RNTO", "RNTO b"}, {"QUIT", "QUIT"},   {"MALFORMED", "XZ@#"}};
  for (auto [symbol, line] : templates) {
    config.inputs.push_back(InputTemplate{Symbol(symbol), line});
  }
  for (const char* code : {"220", "331", "230", "150", "250", "350", "503", "530", "500",
                           "221", "421"}) {
    config.classifiers.push_back(OutputClassifier{code, Symbol(std::string("R") + code)});
  }
  return config;
}

}  // namespace statefuzz::sut
