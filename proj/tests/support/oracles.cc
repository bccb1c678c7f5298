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

#include "support/oracles.h"

#include <map>
#include <stdexcept>

namespace statefuzz::testing {

Walk WalkFrom(const MealyMachine& m, StateId start, const Word& word) {
  Walk walk{{}, start};
  for (const auto& symbol : word) {
    std::size_t input = 0;
    while (input < m.inputs().size() && m.inputs()[input] != symbol) ++input;
    if (input == m.inputs().size()) throw std::invalid_argument("foreign symbol");
    const auto& t = m.transition(walk.end, input);
    walk.outputs.push_back(m.outputs()[t.output].name());
    walk.end = t.target;
  }
  return walk;
}

void ForEachWord(const Alphabet& alphabet, std::size_t length,
                 const std::function<bool(const Word&)>& fn) {
  if (alphabet.empty() && length > 0) return;
  std::vector<std::size_t> digits(length, 0);
  Word word(length, alphabet.empty() ? automata::Symbol("x") : alphabet[0]);
  while (true) {
    if (!fn(word)) return;
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < alphabet.size()) {
        word[pos] = alphabet[digits[pos]];
        break;
      }
      digits[pos] = 0;
      word[pos] = alphabet[0];
      if (pos == 0) return;
    }
    if (length == 0) return;
  }
}

std::optional<Word> BruteShortestWitness(const MealyMachine& a, const MealyMachine& b,
                                         const Alphabet& over, std::size_t max_len) {
  std::optional<Word> found;
  for (std::size_t len = 1; len <= max_len && !found; ++len) {
    ForEachWord(over, len, [&](const Word& w) {
      if (WalkFrom(a, 0, w).outputs != WalkFrom(b, 0, w).outputs) {
        found = w;
        return false;
      }
      return true;
    });
  }
  return found;
}

std::optional<std::size_t> ShortestDisagreementLength(const MealyMachine& a,
                                                      const MealyMachine& b,
                                                      const Alphabet& over,
                                                      std::size_t max_len) {
  std::set<std::pair<StateId, StateId>> level = {{0, 0}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::set<std::pair<StateId, StateId>> next;
    for (const auto& [p, q] : level) {
      for (const auto& symbol : over) {
        Walk wa = WalkFrom(a, p, Word{symbol});
        Walk wb = WalkFrom(b, q, Word{symbol});
        if (wa.outputs != wb.outputs) return len;
        next.insert({wa.end, wb.end});
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

std::size_t BruteDistinctStates(const MealyMachine& m) {
  std::vector<std::vector<std::string>> signature(m.state_count());
  for (std::size_t len = 1; len <= m.state_count(); ++len) {
    ForEachWord(m.inputs(), len, [&](const Word& w) {
      for (StateId s = 0; s < m.state_count(); ++s) {
        signature[s].push_back(WalkFrom(m, s, w).outputs.back());
      }
      return true;
    });
  }
  return std::set<std::vector<std::string>>(signature.begin(), signature.end()).size();
}

automata::TraceLog ExhaustiveTraces(const MealyMachine& m, std::size_t depth) {
  automata::TraceLog log;
  ForEachWord(m.inputs(), depth, [&](const Word& w) {
    Walk walk = WalkFrom(m, 0, w);
    Word outputs;
    for (const auto& name : walk.outputs) outputs.emplace_back(name);
    log.Append(automata::MakeTrace(w, outputs));
    return true;
  });
  return log;
}

std::vector<Word> BruteAccessWords(const MealyMachine& m) {
  std::map<StateId, Word> first;
  for (std::size_t len = 0; len <= m.state_count() && first.size() < m.state_count();
       ++len) {
    ForEachWord(m.inputs(), len, [&](const Word& w) {
      first.try_emplace(WalkFrom(m, 0, w).end, w);
      return true;
    });
  }
  std::vector<Word> words;
  for (auto& [state, word] : first) words.push_back(word);
  return words;
}

std::set<StateId> BruteVisitedStates(const MealyMachine& m, const automata::TraceLog& log) {
  std::set<StateId> visited;
  for (const auto& entry : log.entries) {
    StateId state = 0;
    visited.insert(state);
    for (const auto& step : entry.trace.steps) {
      if (!m.inputs().Contains(step.input)) break;
      Walk walk = WalkFrom(m, state, Word{step.input});
      if (walk.outputs[0] != step.output.name()) break;
      state = walk.end;
      visited.insert(state);
    }
  }
  return visited;
}

}  // namespace statefuzz::testing
