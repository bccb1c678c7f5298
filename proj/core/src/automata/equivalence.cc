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

#include "statefuzz/automata/equivalence.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "statefuzz/errors.h"

namespace statefuzz::automata {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string Exclusive(const Alphabet& from, const Alphabet& other) {
  std::string out;
  for (const Symbol& s : from) {
    if (other.Contains(s)) continue;
    if (!out.empty()) out += ',';
    out += s.name();
  }
  return out;
}

}  // namespace

std::vector<Word> FindDisagreements(const MealyMachine& a,
                                    const MealyMachine& b,
                                    const Alphabet& over, std::size_t limit) {
  std::vector<Word> found;
  if (limit == 0 || over.empty()) return found;

  const std::size_t k = over.size();
  std::vector<std::size_t> index_a(k), index_b(k);
  for (std::size_t i = 0; i < k; ++i) {
    index_a[i] = a.inputs().IndexOrThrow(over[i], "input");
    index_b[i] = b.inputs().IndexOrThrow(over[i], "input");
  }

  const std::size_t nb = b.state_count();
  auto pair_id = [nb](StateId sa, StateId sb) { return std::size_t{sa} * nb + sb; };

  struct Node {
    StateId sa, sb;
    std::size_t parent;  // index into `nodes`
    std::size_t input;   // index into `over`
  };
  std::vector<Node> nodes;
  std::vector<bool> visited(a.state_count() * nb, false);
  nodes.push_back(Node{a.initial_state(), b.initial_state(), kNone, kNone});
  visited[pair_id(a.initial_state(), b.initial_state())] = true;

  auto word_to = [&](std::size_t node, std::size_t last_input) {
    Word word{over[last_input]};
    for (std::size_t n = node; nodes[n].parent != kNone; n = nodes[n].parent) {
      word.push_back(over[nodes[n].input]);
    }
    std::reverse(word.begin(), word.end());
    return word;
  };

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Node current = nodes[head];
    bool witnessed = false;
    for (std::size_t i = 0; i < k; ++i) {
      const Transition& ta = a.transition(current.sa, index_a[i]);
      const Transition& tb = b.transition(current.sb, index_b[i]);
      if (!witnessed && a.outputs()[ta.output] != b.outputs()[tb.output]) {
        witnessed = true;
        found.push_back(word_to(head, i));
        if (found.size() == limit) return found;
      }
      const std::size_t id = pair_id(ta.target, tb.target);
      if (!visited[id]) {
        visited[id] = true;
        nodes.push_back(Node{ta.target, tb.target, head, i});
      }
    }
  }
  return found;
}

EquivalenceResult CheckEquivalence(const MealyMachine& a,
                                   const MealyMachine& b) {
  if (!a.inputs().SameSetAs(b.inputs())) {
    throw AlphabetMismatchError(
        "input alphabets differ: only in first {" + Exclusive(a.inputs(), b.inputs()) +
        "}, only in second {" + Exclusive(b.inputs(), a.inputs()) + "}");
  }
  auto words = FindDisagreements(a, b, a.inputs(), 1);
  if (words.empty()) return {};
  return EquivalenceResult{std::move(words.front())};
}

}  // namespace statefuzz::automata
