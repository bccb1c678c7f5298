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

#include "statefuzz/passive/prefix_tree.h"

#include <algorithm>

namespace statefuzz::passive {

PtaConflictError::PtaConflictError(std::uint64_t trace_id, std::size_t step, Symbol existing,
                                   Symbol clashing)
    : Error("conflicting outputs in trace " + std::to_string(trace_id) + " at step " +
            std::to_string(step) + ": earlier traces recorded " + existing.name() +
            ", this trace recorded " + clashing.name()),
      trace_id_(trace_id),
      step_(step) {}

PrefixTree PrefixTree::Build(const automata::TraceLog& log) {
  PrefixTree tree;
  for (const auto& entry : log.entries) {
    for (const auto& step : entry.trace.steps) {
      tree.inputs_.Add(step.input);
      tree.outputs_.Add(step.output);
    }
  }
  const std::size_t k = tree.inputs_.size();
  tree.parent_.push_back(kNoNode);
  tree.parent_input_.push_back(0);
  tree.edges_.resize(k);

  for (const auto& entry : log.entries) {
    NodeId node = 0;
    for (std::size_t i = 0; i < entry.trace.steps.size(); ++i) {
      const auto& step = entry.trace.steps[i];
      const std::size_t input = *tree.inputs_.IndexOf(step.input);
      const auto output = static_cast<std::uint32_t>(*tree.outputs_.IndexOf(step.output));
      std::size_t slot = std::size_t{node} * k + input;
      if (!tree.edges_[slot].present()) {
        const auto child = static_cast<NodeId>(tree.parent_.size());
        tree.parent_.push_back(node);
        tree.parent_input_.push_back(static_cast<std::uint32_t>(input));
        tree.edges_.resize(tree.edges_.size() + k);
        tree.edges_[slot] = PtaEdge{child, output, 0};
      } else if (tree.edges_[slot].output != output) {
        throw PtaConflictError(entry.id, i, tree.outputs_[tree.edges_[slot].output], step.output);
      }
      ++tree.edges_[slot].evidence;
      node = tree.edges_[slot].child;
    }
  }
  return tree;
}

std::optional<NodeId> PrefixTree::Find(std::span<const Symbol> word) const {
  NodeId node = root();
  for (const Symbol& symbol : word) {
    auto input = inputs_.IndexOf(symbol);
    if (!input) return std::nullopt;
    const PtaEdge& e = edge(node, *input);
    if (!e.present()) return std::nullopt;
    node = e.child;
  }
  return node;
}

Word PrefixTree::AccessSequence(NodeId node) const {
  Word word;
  for (; parent_[node] != kNoNode; node = parent_[node]) {
    word.push_back(inputs_[parent_input_[node]]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace statefuzz::passive
