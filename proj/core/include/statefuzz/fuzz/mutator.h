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

#ifndef STATEFUZZ_FUZZ_MUTATOR_H_
#define STATEFUZZ_FUZZ_MUTATOR_H_

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

#include "statefuzz/automata/symbol.h"

namespace statefuzz::fuzz {

using automata::Alphabet;
using automata::Symbol;
using automata::Word;

using Rng = std::mt19937_64;

enum class MutationOp { kSwap, kDrop, kDuplicate, kInsert, kCorrupt };

inline constexpr std::array<MutationOp, 5> kMutationOps = {
    MutationOp::kSwap, MutationOp::kDrop, MutationOp::kDuplicate, MutationOp::kInsert,
    MutationOp::kCorrupt};

std::string_view ToString(MutationOp op);
// Throws ConfigError.
MutationOp MutationOpFromString(std::string_view text);

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  std::size_t max_trace_len = 12;
  std::map<MutationOp, double> weights = {
      {MutationOp::kSwap, 1.0},   {MutationOp::kDrop, 1.0},    {MutationOp::kDuplicate, 1.0},
      {MutationOp::kInsert, 1.0}, {MutationOp::kCorrupt, 1.0}};
  // Chance that any single message of a mutated trace is replaced by
  // MALFORMED. Zero disables message-level corruption entirely, including
  // the corrupt operator.
  double malformed_ratio = 0.05;
  unsigned jobs = 1;
  std::string campaign = "campaign";

  // Throws ConfigError.
  void Validate() const;
  // Compact JSON with stable key order, as recorded in trace-log headers.
  std::string ToJson() const;
};

// Applies one weighted-random operator to `inputs`:
//   swap two positions, drop one, duplicate one, insert a well-formed symbol
//   from `alphabet`, or corrupt one position to MALFORMED;
// then corrupts each message independently with probability
// malformed_ratio. Operators that cannot apply (drop on an empty trace,
// insert at max length, ...) are skipped. Corruption requires MALFORMED to
// be in `alphabet`. The result never exceeds max_trace_len.
Word MutateTrace(const Word& inputs, Rng& rng, const FuzzConfig& config,
                 const Alphabet& alphabet);

}  // namespace statefuzz::fuzz

#endif  // STATEFUZZ_FUZZ_MUTATOR_H_
