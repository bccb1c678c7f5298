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

#include "statefuzz/fuzz/mutator.h"

#include <utility>
#include <vector>

#include "json.hpp"
#include "statefuzz/errors.h"
#include "statefuzz/sut/builtin.h"

namespace statefuzz::fuzz {
namespace {

// Distribution helpers built on raw engine output, whose sequence the
// standard fixes; std::*_distribution results vary between libraries.
std::size_t UniformIndex(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

double UnitInterval(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool Applicable(MutationOp op, std::size_t length, const FuzzConfig& config,
                bool has_wellformed, bool can_corrupt) {
  switch (op) {
    case MutationOp::kSwap:
      return length >= 2;
    case MutationOp::kDrop:
      return length >= 1;
    case MutationOp::kDuplicate:
      return length >= 1 && length < config.max_trace_len;
    case MutationOp::kInsert:
      return has_wellformed && length < config.max_trace_len;
    case MutationOp::kCorrupt:
      return can_corrupt && length >= 1;
  }
  return false;
}

}  // namespace

std::string_view ToString(MutationOp op) {
  switch (op) {
    case MutationOp::kSwap:
      return "swap";
    case MutationOp::kDrop:
      return "drop";
    case MutationOp::kDuplicate:
      return "duplicate";
    case MutationOp::kInsert:
      return "insert";
    case MutationOp::kCorrupt:
      return "corrupt";
  }
  return "swap";
}

MutationOp MutationOpFromString(std::string_view text) {
  for (MutationOp op : kMutationOps) {
    if (ToString(op) == text) return op;
  }
  throw ConfigError("unknown mutation operator '" + std::string(text) + "'");
}

void FuzzConfig::Validate() const {
  if (max_trace_len == 0) throw ConfigError("max_trace_len must be positive");
  if (jobs == 0) throw ConfigError("jobs must be positive");
  if (!(malformed_ratio >= 0.0 && malformed_ratio <= 1.0)) {
    throw ConfigError("malformed_ratio must lie in [0, 1]");
  }
  double total = 0.0;
  for (const auto& [op, w] : weights) {
    if (!(w >= 0.0)) throw ConfigError("mutation weights must be non-negative");
    total += w;
  }
  if (total <= 0.0) throw ConfigError("mutation weights must not all be zero");
}

std::string FuzzConfig::ToJson() const {
  nlohmann::ordered_json j;
  j["iterations"] = iterations;
  j["max_trace_len"] = max_trace_len;
  j["malformed_ratio"] = malformed_ratio;
  nlohmann::ordered_json w;
  for (MutationOp op : kMutationOps) {
    auto it = weights.find(op);
    w[std::string(ToString(op))] = it == weights.end() ? 0.0 : it->second;
  }
  j["weights"] = std::move(w);
  j["jobs"] = jobs;
  return j.dump();
}

Word MutateTrace(const Word& inputs, Rng& rng, const FuzzConfig& config,
                 const Alphabet& alphabet) {
  const Symbol malformed{std::string(sut::kMalformed)};
  const bool can_corrupt = config.malformed_ratio > 0.0 && alphabet.Contains(malformed);
  std::vector<Symbol> wellformed;
  for (const Symbol& s : alphabet) {
    if (s != malformed) wellformed.push_back(s);
  }

  Word word = inputs;
  if (word.size() > config.max_trace_len) {
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(config.max_trace_len), word.end());
  }

  std::vector<std::pair<MutationOp, double>> eligible;
  double total = 0.0;
  for (MutationOp op : kMutationOps) {
    auto it = config.weights.find(op);
    const double w = it == config.weights.end() ? 0.0 : it->second;
    if (w > 0.0 && Applicable(op, word.size(), config, !wellformed.empty(), can_corrupt)) {
      eligible.emplace_back(op, w);
      total += w;
    }
  }

  if (!eligible.empty()) {
    double roll = UnitInterval(rng) * total;
    MutationOp op = eligible.back().first;
    for (const auto& [candidate, w] : eligible) {
      if (roll < w) {
        op = candidate;
        break;
      }
      roll -= w;
    }
    switch (op) {
      case MutationOp::kSwap: {
        const std::size_t i = UniformIndex(rng, word.size());
        std::size_t j = UniformIndex(rng, word.size() - 1);
        if (j >= i) ++j;
        std::swap(word[i], word[j]);
        break;
      }
      case MutationOp::kDrop:
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(UniformIndex(rng, word.size())));
        break;
      case MutationOp::kDuplicate: {
        const std::size_t i = UniformIndex(rng, word.size());
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(i) + 1, word[i]);
        break;
      }
      case MutationOp::kInsert: {
        const std::size_t at = UniformIndex(rng, word.size() + 1);
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(at),
                    wellformed[UniformIndex(rng, wellformed.size())]);
        break;
      }
      case MutationOp::kCorrupt:
        word[UniformIndex(rng, word.size())] = malformed;
        break;
    }
  }

  if (can_corrupt) {
    for (Symbol& s : word) {
      if (UnitInterval(rng) < config.malformed_ratio) s = malformed;
    }
  }
  return word;
}

}  // namespace statefuzz::fuzz
