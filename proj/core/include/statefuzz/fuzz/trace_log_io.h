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

#ifndef STATEFUZZ_FUZZ_TRACE_LOG_IO_H_
#define STATEFUZZ_FUZZ_TRACE_LOG_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "statefuzz/automata/trace.h"

namespace statefuzz::fuzz {

// Trace-log JSONL: a header line {campaign, sut, seed, cfg} followed by one
// line per trace {id, source, steps: [{in, out}], aborted}.
std::string HeaderLine(const automata::TraceLogHeader& header);
std::string EntryLine(const automata::TraceEntry& entry);
std::string ToJsonl(const automata::TraceLog& log);

// Accepts an empty document and logs without a header line. Throws
// SchemaError naming the offending line.
automata::TraceLog ParseJsonl(std::string_view text);

automata::TraceLog ReadTraceLog(const std::string& path);
void WriteTraceLog(const std::string& path, const automata::TraceLog& log);

// Seed file: a JSON array of arrays of symbol names, e.g. [["USER","PASS"],[]].
std::vector<automata::Word> ParseSeeds(std::string_view json_text);

}  // namespace statefuzz::fuzz

#endif  // STATEFUZZ_FUZZ_TRACE_LOG_IO_H_
