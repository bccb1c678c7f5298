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

#ifndef STATEFUZZ_ACTIVE_QUERY_CACHE_H_
#define STATEFUZZ_ACTIVE_QUERY_CACHE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "statefuzz/sut/session.h"

namespace statefuzz::active {

using automata::Alphabet;
using automata::Symbol;
using automata::Word;

// The SUT answered the same input word differently on two occasions.
class NondeterminismError : public Error {
 public:
  using Error::Error;
};

struct QueryStats {
  std::uint64_t resets = 0;      // traces actually sent to the SUT
  std::uint64_t symbols = 0;     // input symbols actually sent
  std::uint64_t cache_hits = 0;  // queries answered from the cache
};

// Output query front end shared by table filling and equivalence testing.
// Answers are kept in a trie keyed by input word; since a trace also answers
// all of its prefixes, any prefix of an earlier query is a hit.
class QueryCache {
 public:
  explicit QueryCache(sut::SutSession& sut);

  // Full output word for `word`. Throws NondeterminismError when the SUT
  // contradicts an earlier answer, UnknownSymbolError for symbols outside
  // the SUT alphabet, and propagates transport errors.
  Word Query(std::span<const Symbol> word);
  std::optional<Word> Lookup(std::span<const Symbol> word) const;

  const QueryStats& stats() const { return stats_; }
  const sut::SutDescriptor& descriptor() const { return sut_.descriptor(); }

 private:
  struct Node {
    std::vector<std::uint32_t> children;  // 0 = absent; indexed by input
    std::optional<Symbol> output;         // output of the edge into this node
  };

  std::uint32_t Child(std::uint32_t node, std::size_t input) const;
  void Insert(std::span<const Symbol> word, const Word& outputs);

  sut::SutSession& sut_;
  Alphabet alphabet_;
  std::vector<Node> nodes_;
  QueryStats stats_;
};

}  // namespace statefuzz::active

#endif  // STATEFUZZ_ACTIVE_QUERY_CACHE_H_
