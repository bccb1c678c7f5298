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

#include "statefuzz/active/observation_table.h"

#include <stdexcept>
#include <utility>

namespace statefuzz::active {
namespace {

Word Concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word Extend(const Word& a, const Symbol& s) {
  Word out = a;
  out.push_back(s);
  return out;
}

}  // namespace

ObservationTable::ObservationTable(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  AddShortPrefix({});
  for (const Symbol& a : alphabet_) AddSuffix({a});
}

std::vector<Word> ObservationTable::boundary_prefixes() const {
  std::vector<Word> boundary;
  for (const Word& s : short_) {
    for (const Symbol& a : alphabet_) {
      Word extended = Extend(s, a);
      if (!IsShort(extended)) boundary.push_back(std::move(extended));
    }
  }
  return boundary;
}

void ObservationTable::EnsureRow(const Word& prefix) { rows_.try_emplace(prefix); }

bool ObservationTable::AddShortPrefix(const Word& prefix) {
  bool added = false;
  for (std::size_t len = 0; len <= prefix.size(); ++len) {
    Word p(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(len));
    if (short_set_.contains(p)) continue;
    short_set_.insert(p);
    short_.push_back(p);
    EnsureRow(p);
    for (const Symbol& a : alphabet_) EnsureRow(Extend(p, a));
    added = true;
  }
  return added;
}

bool ObservationTable::AddSuffix(const Word& suffix) {
  if (suffix.empty()) throw std::invalid_argument("suffixes must be non-empty");
  if (!suffix_set_.insert(suffix).second) return false;
  suffixes_.push_back(suffix);
  return true;
}

void ObservationTable::Fill(QueryCache& oracle) {
  for (auto& [prefix, row] : rows_) {
    for (std::size_t e = row.size(); e < suffixes_.size(); ++e) {
      const Word outputs = oracle.Query(Concat(prefix, suffixes_[e]));
      row.push_back(outputs.back());
    }
  }
}

bool ObservationTable::IsFilled() const {
  for (const auto& [prefix, row] : rows_) {
    if (row.size() != suffixes_.size()) return false;
  }
  return true;
}

const ObservationTable::Row& ObservationTable::RowOf(const Word& prefix) const {
  auto it = rows_.find(prefix);
  if (it == rows_.end() || it->second.size() != suffixes_.size()) {
    throw std::out_of_range("observation table row [" + automata::FormatWord(prefix) +
                            "] is missing or unfilled");
  }
  return it->second;
}

std::optional<Symbol> ObservationTable::Cell(const Word& prefix, const Word& suffix) const {
  auto row = rows_.find(prefix);
  if (row == rows_.end()) return std::nullopt;
  for (std::size_t e = 0; e < suffixes_.size() && e < row->second.size(); ++e) {
    if (suffixes_[e] == suffix) return row->second[e];
  }
  return std::nullopt;
}

std::optional<Word> FindUnclosed(const ObservationTable& table) {
  std::set<ObservationTable::Row> short_rows;
  for (const Word& s : table.short_prefixes()) short_rows.insert(table.RowOf(s));
  for (const Word& b : table.boundary_prefixes()) {
    if (!short_rows.contains(table.RowOf(b))) return b;
  }
  return std::nullopt;
}

std::optional<Word> FindInconsistency(const ObservationTable& table) {
  const auto& prefixes = table.short_prefixes();
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    for (std::size_t j = i + 1; j < prefixes.size(); ++j) {
      if (table.RowOf(prefixes[i]) != table.RowOf(prefixes[j])) continue;
      for (const Symbol& a : table.alphabet()) {
        const auto& ri = table.RowOf(Extend(prefixes[i], a));
        const auto& rj = table.RowOf(Extend(prefixes[j], a));
        for (std::size_t e = 0; e < ri.size(); ++e) {
          if (ri[e] != rj[e]) {
            Word suffix{a};
            suffix.insert(suffix.end(), table.suffixes()[e].begin(), table.suffixes()[e].end());
            return suffix;
          }
        }
      }
    }
  }
  return std::nullopt;
}

automata::MealyMachine BuildHypothesis(const ObservationTable& table) {
  using automata::StateId;
  std::map<ObservationTable::Row, StateId> state_of;
  std::vector<const Word*> representative;
  for (const Word& s : table.short_prefixes()) {
    auto [it, inserted] = state_of.emplace(table.RowOf(s), static_cast<StateId>(representative.size()));
    if (inserted) representative.push_back(&s);
  }

  const Alphabet& inputs = table.alphabet();
  Alphabet outputs;
  std::vector<automata::Transition> transitions;
  transitions.reserve(representative.size() * inputs.size());
  for (const Word* rep : representative) {
    for (const Symbol& a : inputs) {
      auto target = state_of.find(table.RowOf(Extend(*rep, a)));
      if (target == state_of.end()) {
        throw NotClosedError("observation table is not closed at row [" +
                             automata::FormatWord(Extend(*rep, a)) + "]");
      }
      const Symbol output = *table.Cell(*rep, Word{a});
      transitions.push_back(automata::Transition{target->second, outputs.Add(output)});
    }
  }
  const StateId initial = state_of.at(table.RowOf(Word{}));
  return automata::MealyMachine(inputs, std::move(outputs), representative.size(), initial,
                                std::move(transitions));
}

ObservationTable RefineWithCounterexample(ObservationTable table, const Word& counterexample) {
  table.AddShortPrefix(counterexample);
  return table;
}

}  // namespace statefuzz::active
