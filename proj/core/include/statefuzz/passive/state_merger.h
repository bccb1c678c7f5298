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

#ifndef STATEFUZZ_PASSIVE_STATE_MERGER_H_
#define STATEFUZZ_PASSIVE_STATE_MERGER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "statefuzz/automata/mealy_machine.h"
#include "statefuzz/automata/trace.h"
#include "statefuzz/passive/prefix_tree.h"

namespace statefuzz::passive {

// Output on transitions that no trace exercised.
inline constexpr std::string_view kUnobserved = "UNOBSERVED";

struct MergeConfig {
  // A merge is accepted only if its score reaches this threshold.
  std::uint64_t min_evidence = 0;
};

struct MergeLogEntry {
  enum class Action { kMerge, kPromote };

  std::size_t step = 0;
  Action action = Action::kPromote;
  Word blue;
  std::optional<Word> red;  // merge target
  std::optional<std::uint64_t> score;
};

std::string ToJsonLine(const MergeLogEntry& entry);

// Blue-fringe state merging over a prefix tree. Red nodes form the hypothesis
// kernel; blue nodes are untouched subtrees hanging off red nodes.
class StateMerger {
 public:
  explicit StateMerger(PrefixTree pta);

  const PrefixTree& pta() const { return pta_; }
  const std::vector<NodeId>& red() const { return red_; }
  bool IsRed(NodeId node) const;

  struct BlueNode {
    NodeId node;
    NodeId parent;  // red
    std::size_t input;
    std::vector<std::size_t> access;  // input indices
  };
  // Blue nodes ordered by length, then lexicographically by access sequence.
  std::vector<BlueNode> Blue() const;

  // Folds the tree below `candidate` onto `target` without committing.
  // Returns the overlapped evidence, or nothing on an output conflict.
  // `candidate` must be a node whose subtree is still tree-shaped (a blue
  // node, or any node of a fresh tree) and must differ from `target`.
  std::optional<std::uint64_t> CheckMerge(NodeId target, NodeId candidate) const;
  void Merge(NodeId red, NodeId blue);
  void Promote(NodeId blue);

  // One red-blue decision; returns nothing once no blue node is left.
  std::optional<MergeLogEntry> Step(const MergeConfig& config);

  // Current node reached by `word` in the (partially merged) graph.
  std::optional<NodeId> NodeAt(std::span<const Symbol> word) const;

  // Red kernel as a complete machine: absent transitions lead to a sink
  // that answers UNOBSERVED to everything.
  automata::MealyMachine ToMachine() const;

 private:
  const PtaEdge& edge(NodeId node, std::size_t input) const {
    return edges_[std::size_t{node} * k_ + input];
  }
  PtaEdge& edge(NodeId node, std::size_t input) {
    return edges_[std::size_t{node} * k_ + input];
  }
  struct FoldResult {
    std::uint64_t score = 0;
    std::vector<std::pair<std::size_t, PtaEdge>> writes;  // slot, new edge
  };
  std::optional<FoldResult> Fold(NodeId target, NodeId candidate) const;
  Word ToWord(const std::vector<std::size_t>& access) const;

  PrefixTree pta_;
  std::size_t k_;
  std::vector<PtaEdge> edges_;
  // Incoming edge of every node that is still the root of a tree-shaped
  // subtree; kept current when subtrees move during folds.
  std::vector<NodeId> parent_;
  std::vector<std::size_t> parent_input_;
  std::vector<NodeId> red_;
  std::vector<std::vector<std::size_t>> red_access_;
  std::vector<bool> is_red_;
  std::size_t steps_ = 0;
};

struct PassiveResult {
  automata::MealyMachine model;
  std::vector<MergeLogEntry> merge_log;
  std::size_t pta_nodes = 0;
};

// Builds the prefix tree and runs red-blue merging to completion. Throws
// PtaConflictError, or ConfigError when the log holds no steps at all.
PassiveResult LearnPassive(const automata::TraceLog& log, const MergeConfig& config = {});

}  // namespace statefuzz::passive

#endif  // STATEFUZZ_PASSIVE_STATE_MERGER_H_
