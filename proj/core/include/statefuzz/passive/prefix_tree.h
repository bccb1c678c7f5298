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

#ifndef STATEFUZZ_PASSIVE_PREFIX_TREE_H_
#define STATEFUZZ_PASSIVE_PREFIX_TREE_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "statefuzz/automata/symbol.h"
#include "statefuzz/automata/trace.h"
#include "statefuzz/errors.h"

namespace statefuzz::passive {

using automata::Alphabet;
using automata::Symbol;
using automata::Word;

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Two traces disagree on the output after the same input prefix.
class PtaConflictError : public Error {
 public:
  PtaConflictError(std::uint64_t trace_id, std::size_t step, Symbol existing, Symbol clashing);

  std::uint64_t trace_id() const { return trace_id_; }
  std::size_t step() const { return step_; }

 private:
  std::uint64_t trace_id_;
  std::size_t step_;
};

struct PtaEdge {
  NodeId child = kNoNode;  // kNoNode: no edge
  std::uint32_t output = 0;
  std::uint64_t evidence = 0;

  bool present() const { return child != kNoNode; }
};

// Tree-shaped transducer holding exactly the prefixes of a trace set. Both
// alphabets are ordered by first appearance in the log.
class PrefixTree {
 public:
  // Throws PtaConflictError on inconsistent data.
  static PrefixTree Build(const automata::TraceLog& log);

  const Alphabet& inputs() const { return inputs_; }
  const Alphabet& outputs() const { return outputs_; }
  std::size_t node_count() const { return parent_.size(); }
  NodeId root() const { return 0; }

  const PtaEdge& edge(NodeId node, std::size_t input) const {
    return edges_[std::size_t{node} * inputs_.size() + input];
  }
  NodeId parent(NodeId node) const { return parent_[node]; }
  std::size_t edge_count() const { return node_count() - 1; }

  std::optional<NodeId> Find(std::span<const Symbol> word) const;
  Word AccessSequence(NodeId node) const;

 private:
  Alphabet inputs_;
  Alphabet outputs_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> parent_input_;
  std::vector<PtaEdge> edges_;
};

inline PrefixTree BuildPta(const automata::TraceLog& log) { return PrefixTree::Build(log); }

}  // namespace statefuzz::passive

#endif  // STATEFUZZ_PASSIVE_PREFIX_TREE_H_
