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

#include "statefuzz/automata/minimize.h"

#include <map>
#include <utility>
#include <vector>

namespace statefuzz::automata {
namespace {

// Refinable partition over states 0..n-1. Each block occupies a contiguous
// range of `elems_`; marking moves an element to the front of its block.
class Partition {
 public:
  explicit Partition(const std::vector<std::size_t>& initial_block) {
    const std::size_t n = initial_block.size();
    std::size_t blocks = 0;
    for (std::size_t b : initial_block) blocks = std::max(blocks, b + 1);
    std::vector<std::size_t> sizes(blocks, 0);
    for (std::size_t b : initial_block) ++sizes[b];
    first_.resize(blocks);
    end_.resize(blocks);
    std::size_t offset = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      first_[b] = end_[b] = offset;
      offset += sizes[b];
    }
    elems_.resize(n);
    pos_.resize(n);
    block_of_ = initial_block;
    for (StateId s = 0; s < n; ++s) {
      std::size_t b = initial_block[s];
      pos_[s] = end_[b];
      elems_[end_[b]++] = s;
    }
    marked_.assign(blocks, 0);
  }

  std::size_t block_count() const { return first_.size(); }
  std::size_t block_of(StateId s) const { return block_of_[s]; }
  std::size_t size(std::size_t b) const { return end_[b] - first_[b]; }
  std::vector<StateId> Members(std::size_t b) const {
    return {elems_.begin() + first_[b], elems_.begin() + end_[b]};
  }

  // Returns true the first time a block gets a mark in this round.
  bool Mark(StateId s) {
    const std::size_t b = block_of_[s];
    const std::size_t boundary = first_[b] + marked_[b];
    if (pos_[s] < boundary) return false;  // already marked
    const StateId other = elems_[boundary];
    std::swap(elems_[pos_[s]], elems_[boundary]);
    pos_[other] = pos_[s];
    pos_[s] = boundary;
    return marked_[b]++ == 0;
  }

  // Splits the marked prefix of `b` off into a new block and returns its id,
  // or returns `b` itself when every element was marked.
  std::size_t SplitMarked(std::size_t b) {
    const std::size_t marked = marked_[b];
    marked_[b] = 0;
    if (marked == size(b)) return b;
    const std::size_t nb = first_.size();
    first_.push_back(first_[b]);
    end_.push_back(first_[b] + marked);
    marked_.push_back(0);
    first_[b] += marked;
    for (std::size_t i = first_[nb]; i < end_[nb]; ++i) block_of_[elems_[i]] = nb;
    return nb;
  }

 private:
  std::vector<StateId> elems_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> first_, end_, marked_;
};

}  // namespace

MealyMachine Minimize(const MealyMachine& machine) {
  const std::size_t n = machine.state_count();
  const std::size_t k = machine.inputs().size();

  // Initial partition: equal output rows.
  std::map<std::vector<std::size_t>, std::size_t> row_block;
  std::vector<std::size_t> initial(n);
  for (StateId s = 0; s < n; ++s) {
    std::vector<std::size_t> row(k);
    for (std::size_t a = 0; a < k; ++a) row[a] = machine.transition(s, a).output;
    auto [it, _] = row_block.emplace(std::move(row), row_block.size());
    initial[s] = it->second;
  }
  Partition partition(initial);

  // pred[a][t]: states s with s --a--> t.
  std::vector<std::vector<std::vector<StateId>>> pred(
      k, std::vector<std::vector<StateId>>(n));
  for (StateId s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < k; ++a) pred[a][machine.Next(s, a)].push_back(s);
  }

  std::vector<std::pair<std::size_t, std::size_t>> work;
  std::vector<std::vector<bool>> in_work;
  auto push = [&](std::size_t block, std::size_t a) {
    if (in_work.size() <= block) in_work.resize(block + 1, std::vector<bool>(k, false));
    if (in_work[block][a]) return;
    in_work[block][a] = true;
    work.emplace_back(block, a);
  };
  for (std::size_t b = 0; b < partition.block_count(); ++b) {
    for (std::size_t a = 0; a < k; ++a) push(b, a);
  }

  std::vector<std::size_t> touched;
  while (!work.empty()) {
    auto [splitter, a] = work.back();
    work.pop_back();
    in_work[splitter][a] = false;

    touched.clear();
    for (StateId t : partition.Members(splitter)) {
      for (StateId s : pred[a][t]) {
        if (partition.Mark(s)) touched.push_back(partition.block_of(s));
      }
    }
    for (std::size_t b : touched) {
      const std::size_t nb = partition.SplitMarked(b);
      if (nb == b) continue;
      const std::size_t smaller = partition.size(nb) <= partition.size(b) ? nb : b;
      for (std::size_t c = 0; c < k; ++c) {
        if (b < in_work.size() && in_work[b][c]) {
          push(nb, c);
        } else {
          push(smaller, c);
        }
      }
    }
  }

  const std::size_t m = partition.block_count();
  std::vector<Transition> table(m * k);
  for (std::size_t b = 0; b < m; ++b) {
    const StateId rep = partition.Members(b).front();
    for (std::size_t a = 0; a < k; ++a) {
      const Transition& t = machine.transition(rep, a);
      table[b * k + a] = Transition{static_cast<StateId>(partition.block_of(t.target)),
                                    t.output};
    }
  }
  return MealyMachine(machine.inputs(), machine.outputs(), m,
                      static_cast<StateId>(partition.block_of(machine.initial_state())),
                      std::move(table));
}

}  // namespace statefuzz::automata
