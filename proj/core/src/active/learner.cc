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

#include "statefuzz/active/learner.h"

#include <utility>

#include "json.hpp"

namespace statefuzz::active {
namespace {

// SplitMix64 step; gives each round an independent random-walk stream.
std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string ToJsonLine(const RoundLog& log) {
  nlohmann::ordered_json j;
  j["round"] = log.round;
  j["short_rows"] = log.short_rows;
  j["boundary_rows"] = log.boundary_rows;
  j["suffixes"] = log.suffixes;
  j["hypothesis_states"] = log.hypothesis_states;
  if (log.counterexample) {
    nlohmann::ordered_json cex = nlohmann::ordered_json::array();
    for (const Symbol& s : *log.counterexample) cex.push_back(s.name());
    j["counterexample"] = std::move(cex);
  } else {
    j["counterexample"] = nullptr;
  }
  j["resets"] = log.stats.resets;
  j["symbols"] = log.stats.symbols;
  j["cache_hits"] = log.stats.cache_hits;
  return j.dump();
}

ActiveResult LearnActive(sut::SutSession& sut, const Alphabet& alphabet,
                         const EquivalenceConfig& config,
                         const std::function<void(const RoundLog&)>& on_round) {
  if (alphabet.empty()) throw ConfigError("learning alphabet must not be empty");
  for (const Symbol& a : alphabet) sut.descriptor().inputs.IndexOrThrow(a, "input");
  config.Validate();

  QueryCache oracle(sut);
  ObservationTable table(alphabet);
  std::vector<RoundLog> rounds;

  for (std::size_t round = 1;; ++round) {
    table.Fill(oracle);
    while (true) {
      if (auto unclosed = FindUnclosed(table)) {
        table.AddShortPrefix(*unclosed);
      } else if (auto suffix = FindInconsistency(table)) {
        table.AddSuffix(*suffix);
      } else {
        break;
      }
      table.Fill(oracle);
    }

    automata::MealyMachine hypothesis = BuildHypothesis(table);
    EquivalenceConfig round_config = config;
    round_config.seed = Mix(config.seed ^ Mix(round));
    std::optional<Word> counterexample = FindCounterexample(oracle, hypothesis, round_config);

    RoundLog log{round,
                 table.short_prefixes().size(),
                 table.boundary_prefixes().size(),
                 table.suffixes().size(),
                 hypothesis.state_count(),
                 counterexample,
                 oracle.stats()};
    if (on_round) on_round(log);
    rounds.push_back(std::move(log));

    if (!counterexample) {
      return ActiveResult{std::move(hypothesis), oracle.stats(), std::move(rounds),
                          std::move(table)};
    }
    table = RefineWithCounterexample(std::move(table), *counterexample);
  }
}

}  // namespace statefuzz::active
