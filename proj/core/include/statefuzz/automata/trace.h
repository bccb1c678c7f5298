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

#ifndef STATEFUZZ_AUTOMATA_TRACE_H_
#define STATEFUZZ_AUTOMATA_TRACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statefuzz/automata/symbol.h"

namespace statefuzz::automata {

enum class TraceSource { kFuzz, kManual, kGuided };

std::string_view ToString(TraceSource source);
// Throws SchemaError on an unknown tag.
TraceSource TraceSourceFromString(std::string_view tag);

struct Step {
  Symbol input;
  Symbol output;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Trace {
  std::vector<Step> steps;
  TraceSource source = TraceSource::kManual;
  std::optional<std::uint64_t> seed;

  Word Inputs() const;
  Word Outputs() const;

  friend bool operator==(const Trace&, const Trace&) = default;
};

// Zips equally long input and output words into a trace.
Trace MakeTrace(const Word& inputs, const Word& outputs,
                TraceSource source = TraceSource::kManual);

struct TraceEntry {
  std::uint64_t id = 0;
  Trace trace;
  // The SUT connection failed part way; `trace` holds the steps observed
  // before the failure.
  bool aborted = false;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct TraceLogHeader {
  std::string campaign;
  std::string sut;
  std::uint64_t seed = 0;
  // Resolved campaign configuration as a compact JSON object.
  std::string config_json = "{}";

  friend bool operator==(const TraceLogHeader&, const TraceLogHeader&) = default;
};

struct TraceLog {
  TraceLogHeader header;
  std::vector<TraceEntry> entries;

  // Appends with the next free id.
  TraceEntry& Append(Trace trace, bool aborted = false);

  friend bool operator==(const TraceLog&, const TraceLog&) = default;
};

}  // namespace statefuzz::automata

#endif  // STATEFUZZ_AUTOMATA_TRACE_H_
