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

#include "statefuzz/automata/trace.h"

#include <stdexcept>

#include "statefuzz/errors.h"

namespace statefuzz::automata {

std::string_view ToString(TraceSource source) {
  switch (source) {
    case TraceSource::kFuzz:
      return "fuzz";
    case TraceSource::kManual:
      return "manual";
    case TraceSource::kGuided:
      return "guided";
  }
  return "manual";
}

TraceSource TraceSourceFromString(std::string_view tag) {
  if (tag == "fuzz") return TraceSource::kFuzz;
  if (tag == "manual") return TraceSource::kManual;
  if (tag == "guided") return TraceSource::kGuided;
  throw SchemaError("unknown trace source '" + std::string(tag) + "'");
}

Word Trace::Inputs() const {
  Word word;
  word.reserve(steps.size());
  for (const Step& step : steps) word.push_back(step.input);
  return word;
}

Word Trace::Outputs() const {
  Word word;
  word.reserve(steps.size());
  for (const Step& step : steps) word.push_back(step.output);
  return word;
}

Trace MakeTrace(const Word& inputs, const Word& outputs, TraceSource source) {
  if (inputs.size() != outputs.size()) {
    throw std::invalid_argument("MakeTrace: input and output lengths differ");
  }
  Trace trace;
  trace.source = source;
  trace.steps.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    trace.steps.push_back(Step{inputs[i], outputs[i]});
  }
  return trace;
}

TraceEntry& TraceLog::Append(Trace trace, bool aborted) {
  std::uint64_t id = entries.empty() ? 0 : entries.back().id + 1;
  entries.push_back(TraceEntry{id, std::move(trace), aborted});
  return entries.back();
}

}  // namespace statefuzz::automata
