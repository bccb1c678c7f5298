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

#include "statefuzz/active/query_cache.h"

#include <sstream>

namespace statefuzz::active {

QueryCache::QueryCache(sut::SutSession& sut)
    : sut_(sut), alphabet_(sut.descriptor().inputs), nodes_(1) {}

std::uint32_t QueryCache::Child(std::uint32_t node, std::size_t input) const {
  const auto& children = nodes_[node].children;
  return children.empty() ? 0 : children[input];
}

std::optional<Word> QueryCache::Lookup(std::span<const Symbol> word) const {
  Word outputs;
  outputs.reserve(word.size());
  std::uint32_t node = 0;
  for (const Symbol& symbol : word) {
    auto input = alphabet_.IndexOf(symbol);
    if (!input) return std::nullopt;
    node = Child(node, *input);
    if (node == 0) return std::nullopt;
    outputs.push_back(*nodes_[node].output);
  }
  return outputs;
}

Word QueryCache::Query(std::span<const Symbol> word) {
  for (const Symbol& symbol : word) alphabet_.IndexOrThrow(symbol, "input");
  if (auto cached = Lookup(word)) {
    ++stats_.cache_hits;
    return *std::move(cached);
  }
  Word outputs = sut::RunTrace(sut_, word);
  ++stats_.resets;
  stats_.symbols += word.size();
  Insert(word, outputs);
  return outputs;
}

void QueryCache::Insert(std::span<const Symbol> word, const Word& outputs) {
  std::uint32_t node = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::size_t input = *alphabet_.IndexOf(word[i]);
    std::uint32_t child = Child(node, input);
    if (child == 0) {
      child = static_cast<std::uint32_t>(nodes_.size());
      nodes_.push_back(Node{{}, outputs[i]});
      auto& children = nodes_[node].children;
      if (children.empty()) children.assign(alphabet_.size(), 0);
      children[input] = child;
    } else if (*nodes_[child].output != outputs[i]) {
      std::ostringstream msg;
      msg << "nondeterministic SUT: input word [" << automata::FormatWord(word.first(i + 1))
          << "] answered " << *nodes_[child].output << " before and " << outputs[i] << " now";
      throw NondeterminismError(msg.str());
    }
    node = child;
  }
}

}  // namespace statefuzz::active
