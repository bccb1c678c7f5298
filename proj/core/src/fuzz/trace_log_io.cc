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

#include "statefuzz/fuzz/trace_log_io.h"

#include <set>
#include <utility>

#include "json.hpp"
#include "statefuzz/automata/serialization.h"
#include "statefuzz/errors.h"

namespace statefuzz::fuzz {
namespace {

using Json = nlohmann::ordered_json;
using automata::Symbol;
using automata::TraceEntry;
using automata::TraceLog;

[[noreturn]] void Fail(std::size_t line, const std::string& what) {
  throw SchemaError("trace log line " + std::to_string(line) + ": " + what);
}

Symbol SymbolAt(const Json& value, std::size_t line, const char* field) {
  if (!value.is_string()) Fail(line, std::string("'") + field + "' must be a string");
  try {
    return Symbol(value.get<std::string>());
  } catch (const InvalidSymbolError& e) {
    Fail(line, e.what());
  }
}

TraceEntry ParseEntry(const Json& j, std::size_t line) {
  TraceEntry entry;
  if (!j.contains("id") || !j["id"].is_number_unsigned()) {
    Fail(line, "'id' must be a non-negative integer");
  }
  entry.id = j["id"].get<std::uint64_t>();
  if (j.contains("source")) {
    if (!j["source"].is_string()) Fail(line, "'source' must be a string");
    try {
      entry.trace.source = automata::TraceSourceFromString(j["source"].get<std::string>());
    } catch (const SchemaError& e) {
      Fail(line, e.what());
    }
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) Fail(line, "'seed' must be a non-negative integer");
    entry.trace.seed = j["seed"].get<std::uint64_t>();
  }
  if (!j.contains("steps") || !j["steps"].is_array()) Fail(line, "'steps' must be an array");
  for (const Json& step : j["steps"]) {
    if (!step.is_object() || !step.contains("in") || !step.contains("out")) {
      Fail(line, "each step must be an object {in, out}");
    }
    entry.trace.steps.push_back(
        automata::Step{SymbolAt(step["in"], line, "in"), SymbolAt(step["out"], line, "out")});
  }
  if (j.contains("aborted")) {
    if (!j["aborted"].is_boolean()) Fail(line, "'aborted' must be a boolean");
    entry.aborted = j["aborted"].get<bool>();
  }
  return entry;
}

}  // namespace

std::string HeaderLine(const automata::TraceLogHeader& header) {
  Json j;
  j["campaign"] = header.campaign;
  j["sut"] = header.sut;
  j["seed"] = header.seed;
  j["cfg"] = Json::parse(header.config_json.empty() ? "{}" : header.config_json);
  return j.dump();
}

std::string EntryLine(const TraceEntry& entry) {
  Json j;
  j["id"] = entry.id;
  j["source"] = std::string(automata::ToString(entry.trace.source));
  Json steps = Json::array();
  for (const auto& step : entry.trace.steps) {
    Json s;
    s["in"] = step.input.name();
    s["out"] = step.output.name();
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["aborted"] = entry.aborted;
  return j.dump();
}

std::string ToJsonl(const TraceLog& log) {
  std::string out = HeaderLine(log.header) + "\n";
  for (const auto& entry : log.entries) out += EntryLine(entry) + "\n";
  return out;
}

TraceLog ParseJsonl(std::string_view text) {
  TraceLog log;
  std::set<std::uint64_t> ids;
  std::size_t line_no = 0;
  bool first = true;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    Json j;
    try {
      j = Json::parse(line.begin(), line.end());
    } catch (const Json::parse_error& e) {
      Fail(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) Fail(line_no, "expected a JSON object");

    if (first && !j.contains("steps")) {
      first = false;
      if (j.contains("campaign") && j["campaign"].is_string()) {
        log.header.campaign = j["campaign"].get<std::string>();
      }
      if (j.contains("sut") && j["sut"].is_string()) log.header.sut = j["sut"].get<std::string>();
      if (j.contains("seed") && j["seed"].is_number_unsigned()) {
        log.header.seed = j["seed"].get<std::uint64_t>();
      }
      if (j.contains("cfg")) log.header.config_json = j["cfg"].dump();
      continue;
    }
    first = false;
    TraceEntry entry = ParseEntry(j, line_no);
    if (!ids.insert(entry.id).second) {
      Fail(line_no, "duplicate trace id " + std::to_string(entry.id));
    }
    log.entries.push_back(std::move(entry));
  }
  return log;
}

TraceLog ReadTraceLog(const std::string& path) {
  return ParseJsonl(automata::ReadTextFile(path));
}

void WriteTraceLog(const std::string& path, const TraceLog& log) {
  automata::WriteTextFile(path, ToJsonl(log));
}

std::vector<automata::Word> ParseSeeds(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text.begin(), json_text.end());
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("seed file: malformed JSON: ") + e.what());
  }
  if (!j.is_array()) throw ConfigError("seed file: expected an array of arrays");
  std::vector<automata::Word> seeds;
  for (const Json& seed : j) {
    if (!seed.is_array()) throw ConfigError("seed file: every seed must be an array");
    automata::Word word;
    for (const Json& s : seed) {
      if (!s.is_string()) throw ConfigError("seed file: symbols must be strings");
      word.emplace_back(s.get<std::string>());
    }
    seeds.push_back(std::move(word));
  }
  return seeds;
}

}  // namespace statefuzz::fuzz
