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

#include "statefuzz/passive/state_merger.h"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "json.hpp"

namespace statefuzz::passive {
namespace {

bool ShortLex(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

nlohmann::ordered_json WordJson(const Word& word) {
  auto j = nlohmann::ordered_json::array();
  for (const Symbol& s : word) j.push_back(s.name());
  return j;
}

}  // namespace

std::string ToJsonLine(const MergeLogEntry& entry) {
  nlohmann::ordered_json j;
  j["step"] = entry.step;
  j["action"] = entry.action == MergeLogEntry::Action::kMerge ? "merge" : "promote";
  j["blue"] = WordJson(entry.blue);
  j["red"] = entry.red ? WordJson(*entry.red) : nlohmann::ordered_json(nullptr);
  j["score"] = entry.score ? nlohmann::ordered_json(*entry.score) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

StateMerger::StateMerger(PrefixTree pta)
    : pta_(std::move(pta)), k_(pta_.inputs().size()) {
  const std::size_t n = pta_.node_count();
  edges_.resize(n * k_);
  parent_.resize(n);
  parent_input_.resize(n, 0);
  for (NodeId node = 0; node < n; ++node) {
    parent_[node] = pta_.parent(node);
    for (std::size_t a = 0; a < k_; ++a) {
      edge(node, a) = pta_.edge(node, a);
      if (edge(node, a).present()) parent_input_[edge(node, a).child] = a;
    }
  }
  is_red_.assign(n, false);
  red_.push_back(pta_.root());
  red_access_.emplace_back();
  is_red_[pta_.root()] = true;
}

bool StateMerger::IsRed(NodeId node) const { return is_red_[node]; }

std::vector<StateMerger::BlueNode> StateMerger::Blue() const {
  std::vector<BlueNode> blue;
  for (std::size_t r = 0; r < red_.size(); ++r) {
    for (std::size_t a = 0; a < k_; ++a) {
      const PtaEdge& e = edge(red_[r], a);
      if (!e.present() || is_red_[e.child]) continue;
      std::vector<std::size_t> access = red_access_[r];
      access.push_back(a);
      blue.push_back(BlueNode{e.child, red_[r], a, std::move(access)});
    }
  }
  std::stable_sort(blue.begin(), blue.end(),
                   [](const BlueNode& x, const BlueNode& y) { return ShortLex(x.access, y.access); });
  return blue;
}

std::optional<StateMerger::FoldResult> StateMerger::Fold(NodeId target, NodeId candidate) const {
  std::unordered_map<std::size_t, PtaEdge> overlay;
  auto read = [&](NodeId node, std::size_t a) -> const PtaEdge& {
    const std::size_t slot = std::size_t{node} * k_ + a;
    auto it = overlay.find(slot);
    return it == overlay.end() ? edges_[slot] : it->second;
  };
  auto write = [&](NodeId node, std::size_t a, const PtaEdge& e) {
    overlay[std::size_t{node} * k_ + a] = e;
  };

  // Redirect the candidate's incoming edge first so the fold never walks
  // back into the subtree being folded.
  if (parent_[candidate] != kNoNode) {
    PtaEdge incoming = read(parent_[candidate], parent_input_[candidate]);
    incoming.child = target;
    write(parent_[candidate], parent_input_[candidate], incoming);
  }

  FoldResult result;
  std::vector<std::pair<NodeId, NodeId>> work{{target, candidate}};
  while (!work.empty()) {
    auto [into, from] = work.back();
    work.pop_back();
    for (std::size_t a = 0; a < k_; ++a) {
      const PtaEdge from_edge = read(from, a);
      if (!from_edge.present()) continue;
      const PtaEdge into_edge = read(into, a);
      if (!into_edge.present()) {
        write(into, a, from_edge);
        continue;
      }
      if (into_edge.output != from_edge.output) return std::nullopt;
      result.score += from_edge.evidence;
      write(into, a, PtaEdge{into_edge.child, into_edge.output,
                             into_edge.evidence + from_edge.evidence});
      work.emplace_back(into_edge.child, from_edge.child);
    }
  }
  result.writes.assign(overlay.begin(), overlay.end());
  std::sort(result.writes.begin(), result.writes.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return result;
}

std::optional<std::uint64_t> StateMerger::CheckMerge(NodeId target, NodeId candidate) const {
  if (target == candidate) return std::nullopt;
  auto folded = Fold(target, candidate);
  if (!folded) return std::nullopt;
  return folded->score;
}

void StateMerger::Merge(NodeId red, NodeId blue) {
  auto folded = Fold(red, blue);
  if (!folded) throw Error("StateMerger::Merge called on an incompatible pair");
  for (const auto& [slot, e] : folded->writes) {
    const PtaEdge before = edges_[slot];
    edges_[slot] = e;
    // A changed child means a subtree was re-attached here.
    if (e.present() && e.child != before.child && !is_red_[e.child]) {
      parent_[e.child] = static_cast<NodeId>(slot / k_);
      parent_input_[e.child] = slot % k_;
    }
  }
  parent_[blue] = kNoNode;
}

void StateMerger::Promote(NodeId blue) {
  for (const BlueNode& b : Blue()) {
    if (b.node != blue) continue;
    red_.push_back(blue);
    red_access_.push_back(b.access);
    is_red_[blue] = true;
    return;
  }
  throw Error("StateMerger::Promote: node is not blue");
}

std::optional<MergeLogEntry> StateMerger::Step(const MergeConfig& config) {
  const std::vector<BlueNode> blue = Blue();
  if (blue.empty()) return std::nullopt;
  const BlueNode& pick = blue.front();

  std::optional<std::size_t> best;
  std::uint64_t best_score = 0;
  for (std::size_t r = 0; r < red_.size(); ++r) {
    auto score = CheckMerge(red_[r], pick.node);
    if (!score || *score < config.min_evidence) continue;
    if (!best || *score > best_score) {
      best = r;
      best_score = *score;
    }
  }

  MergeLogEntry entry;
  entry.step = steps_++;
  entry.blue = ToWord(pick.access);
  if (best) {
    entry.action = MergeLogEntry::Action::kMerge;
    entry.red = ToWord(red_access_[*best]);
    entry.score = best_score;
    Merge(red_[*best], pick.node);
  } else {
    entry.action = MergeLogEntry::Action::kPromote;
    red_.push_back(pick.node);
    red_access_.push_back(pick.access);
    is_red_[pick.node] = true;
  }
  return entry;
}

std::optional<NodeId> StateMerger::NodeAt(std::span<const Symbol> word) const {
  NodeId node = pta_.root();
  for (const Symbol& symbol : word) {
    auto a = pta_.inputs().IndexOf(symbol);
    if (!a || !edge(node, *a).present()) return std::nullopt;
    node = edge(node, *a).child;
  }
  return node;
}

Word StateMerger::ToWord(const std::vector<std::size_t>& access) const {
  Word word;
  word.reserve(access.size());
  for (std::size_t a : access) word.push_back(pta_.inputs()[a]);
  return word;
}

automata::MealyMachine StateMerger::ToMachine() const {
  using automata::StateId;
  using automata::Transition;
  std::unordered_map<NodeId, StateId> index;
  for (std::size_t r = 0; r < red_.size(); ++r) index.emplace(red_[r], static_cast<StateId>(r));

  Alphabet outputs = pta_.outputs();
  const auto sink = static_cast<StateId>(red_.size());
  bool needs_sink = false;
  std::vector<Transition> table;
  table.reserve((red_.size() + 1) * k_);
  for (NodeId node : red_) {
    for (std::size_t a = 0; a < k_; ++a) {
      const PtaEdge& e = edge(node, a);
      auto target = e.present() ? index.find(e.child) : index.end();
      if (target == index.end()) {
        // Absent, or still hanging off a blue subtree when called early.
        needs_sink = true;
        table.push_back(Transition{sink, outputs.Add(Symbol(std::string(kUnobserved)))});
      } else {
        table.push_back(Transition{target->second, e.output});
      }
    }
  }
  std::size_t states = red_.size();
  if (needs_sink) {
    const std::size_t unobserved = *outputs.IndexOf(Symbol(std::string(kUnobserved)));
    for (std::size_t a = 0; a < k_; ++a) table.push_back(Transition{sink, unobserved});
    ++states;
  }
  return automata::MealyMachine(pta_.inputs(), std::move(outputs), states, 0, std::move(table));
}

PassiveResult LearnPassive(const automata::TraceLog& log, const MergeConfig& config) {
  PrefixTree pta = PrefixTree::Build(log);
  if (pta.inputs().empty()) throw ConfigError("trace log contains no steps to learn from");
  const std::size_t pta_nodes = pta.node_count();
  StateMerger merger(std::move(pta));
  std::vector<MergeLogEntry> merge_log;
  while (auto entry = merger.Step(config)) merge_log.push_back(std::move(*entry));
  return PassiveResult{merger.ToMachine(), std::move(merge_log), pta_nodes};
}

}  // namespace statefuzz::passive
