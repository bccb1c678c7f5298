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

#include "statefuzz/active/equivalence_oracle.h"

#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>

namespace statefuzz::active {
namespace {

using automata::MealyMachine;
using automata::StateId;

// Saturating arithmetic for budget estimates.
std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t Power(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) result = SatMul(result, base);
  return result;
}

// Queries `word` and returns the shortest prefix on which the SUT and the
// hypothesis disagree, if any.
std::optional<Word> Disagreement(QueryCache& oracle, const MealyMachine& hypothesis,
                                 const Word& word) {
  const Word observed = oracle.Query(word);
  const Word expected = hypothesis.Run(word);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (observed[i] != expected[i]) {
      return Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i + 1));
    }
  }
  return std::nullopt;
}

// Calls `visit` on every word of exactly `length` symbols in lexicographic
// alphabet order until it returns a value.
template <typename Visit>
std::optional<Word> ForEachWord(const Alphabet& alphabet, unsigned length, Visit&& visit) {
  std::vector<std::size_t> digits(length, 0);
  Word word(length, alphabet[0]);
  while (true) {
    if (auto found = visit(word)) return found;
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < alphabet.size()) {
        word[pos] = alphabet[digits[pos]];
        break;
      }
      digits[pos] = 0;
      word[pos] = alphabet[0];
      if (pos == 0) return std::nullopt;
    }
    if (length == 0) return std::nullopt;
  }
}

std::optional<Word> Exhaustive(QueryCache& oracle, const MealyMachine& hypothesis,
                               const EquivalenceConfig& config) {
  const Alphabet& alphabet = hypothesis.inputs();
  for (unsigned length = 1; length <= config.depth_bound; ++length) {
    auto found = ForEachWord(alphabet, length, [&](const Word& word) {
      return Disagreement(oracle, hypothesis, word);
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Word> RandomWalks(QueryCache& oracle, const MealyMachine& hypothesis,
                                const EquivalenceConfig& config) {
  const Alphabet& alphabet = hypothesis.inputs();
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (unsigned walk = 0; walk < config.walk_count; ++walk) {
    Word word;
    word.reserve(config.walk_length);
    for (unsigned i = 0; i < config.walk_length; ++i) word.push_back(alphabet[pick(rng)]);
    if (auto found = Disagreement(oracle, hypothesis, word)) return found;
  }
  return std::nullopt;
}

std::optional<Word> WMethod(QueryCache& oracle, const MealyMachine& hypothesis,
                            const EquivalenceConfig& config) {
  const Alphabet& alphabet = hypothesis.inputs();
  const std::vector<Word> access = automata::AccessSequences(hypothesis);

  // Separating words plus every single input, so each middle section is
  // followed by at least one checked transition.
  std::vector<Word> suffixes;
  std::set<Word> seen;
  for (const Symbol& a : alphabet) {
    if (seen.insert(Word{a}).second) suffixes.push_back(Word{a});
  }
  for (Word& w : SeparatingSequences(hypothesis)) {
    if (seen.insert(w).second) suffixes.push_back(std::move(w));
  }

  std::uint64_t middles = 0;
  for (unsigned l = 0; l <= config.depth_bound; ++l) {
    middles = SatAdd(middles, Power(alphabet.size(), l));
  }
  const std::uint64_t tests = SatMul(SatMul(access.size(), middles), suffixes.size());
  if (tests > kTestWordBudget) return RandomWalks(oracle, hypothesis, config);

  for (unsigned length = 0; length <= config.depth_bound; ++length) {
    for (const Word& prefix : access) {
      auto found = ForEachWord(alphabet, length, [&](const Word& middle) -> std::optional<Word> {
        for (const Word& suffix : suffixes) {
          Word test = prefix;
          test.insert(test.end(), middle.begin(), middle.end());
          test.insert(test.end(), suffix.begin(), suffix.end());
          if (auto d = Disagreement(oracle, hypothesis, test)) return d;
        }
        return std::nullopt;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

std::optional<Word> ShortestSeparating(const MealyMachine& m, StateId first, StateId second) {
  const std::size_t n = m.state_count();
  const std::size_t k = m.inputs().size();
  struct Node {
    StateId a, b;
    std::size_t parent, input;
  };
  constexpr std::size_t kRoot = std::numeric_limits<std::size_t>::max();
  std::vector<Node> nodes{{first, second, kRoot, 0}};
  std::vector<bool> visited(n * n, false);
  visited[first * n + second] = true;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Node cur = nodes[head];
    for (std::size_t a = 0; a < k; ++a) {
      const auto& ta = m.transition(cur.a, a);
      const auto& tb = m.transition(cur.b, a);
      if (ta.output != tb.output) {
        Word word{m.inputs()[a]};
        for (std::size_t i = head; nodes[i].parent != kRoot; i = nodes[i].parent) {
          word.insert(word.begin(), m.inputs()[nodes[i].input]);
        }
        return word;
      }
      if (!visited[ta.target * n + tb.target]) {
        visited[ta.target * n + tb.target] = true;
        nodes.push_back(Node{ta.target, tb.target, head, a});
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view ToString(EquivalenceMode mode) {
  switch (mode) {
    case EquivalenceMode::kRandomWalk:
      return "random-walk";
    case EquivalenceMode::kWMethod:
      return "w-method";
    case EquivalenceMode::kExhaustive:
      return "exhaustive";
  }
  return "w-method";
}

EquivalenceMode EquivalenceModeFromString(std::string_view text) {
  if (text == "random-walk") return EquivalenceMode::kRandomWalk;
  if (text == "w-method") return EquivalenceMode::kWMethod;
  if (text == "exhaustive") return EquivalenceMode::kExhaustive;
  throw ConfigError("unknown equivalence mode '" + std::string(text) +
                    "'; expected exhaustive, w-method or random-walk");
}

void EquivalenceConfig::Validate() const {
  if (walk_count == 0 || walk_length == 0) {
    throw ConfigError("random-walk walk_count and walk_length must be positive");
  }
}

std::vector<Word> SeparatingSequences(const MealyMachine& machine) {
  std::vector<Word> words;
  std::set<Word> seen;
  for (StateId i = 0; i < machine.state_count(); ++i) {
    for (StateId j = i + 1; j < machine.state_count(); ++j) {
      if (auto w = ShortestSeparating(machine, i, j); w && seen.insert(*w).second) {
        words.push_back(*std::move(w));
      }
    }
  }
  return words;
}

std::optional<Word> FindCounterexample(QueryCache& oracle, const MealyMachine& hypothesis,
                                       const EquivalenceConfig& config) {
  config.Validate();
  switch (config.mode) {
    case EquivalenceMode::kExhaustive:
      if (Power(hypothesis.inputs().size(), config.depth_bound) > kTestWordBudget) {
        throw ConfigError("exhaustive equivalence with " +
                          std::to_string(hypothesis.inputs().size()) + " inputs and depth " +
                          std::to_string(config.depth_bound) + " exceeds the query budget of " +
                          std::to_string(kTestWordBudget) + " words");
      }
      return Exhaustive(oracle, hypothesis, config);
    case EquivalenceMode::kWMethod:
      return WMethod(oracle, hypothesis, config);
    case EquivalenceMode::kRandomWalk:
      return RandomWalks(oracle, hypothesis, config);
  }
  return std::nullopt;
}

std::optional<Word> FindCounterexample(sut::SutSession& sut, const MealyMachine& hypothesis,
                                       const EquivalenceConfig& config) {
  QueryCache oracle(sut);
  return FindCounterexample(oracle, hypothesis, config);
}

}  // namespace statefuzz::active
