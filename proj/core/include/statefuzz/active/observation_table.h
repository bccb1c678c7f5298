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

#ifndef STATEFUZZ_ACTIVE_OBSERVATION_TABLE_H_
#define STATEFUZZ_ACTIVE_OBSERVATION_TABLE_H_

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "statefuzz/active/query_cache.h"
#include "statefuzz/automata/mealy_machine.h"

namespace statefuzz::active {

class NotClosedError : public Error {
 public:
  using Error::Error;
};

// Observation table for Mealy machines. Rows are indexed by prefixes: the
// short rows S (prefix-closed, insertion ordered) and the boundary S·A \ S.
// Columns are non-empty suffixes E, initially every single input. A cell
// holds the last output of querying prefix·suffix.
class ObservationTable {
 public:
  using Row = std::vector<Symbol>;

  explicit ObservationTable(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& short_prefixes() const { return short_; }
  std::vector<Word> boundary_prefixes() const;
  const std::vector<Word>& suffixes() const { return suffixes_; }

  bool IsShort(const Word& prefix) const { return short_set_.contains(prefix); }

  // Set semantics; return whether anything was added. AddShortPrefix also
  // adds the missing prefixes of `prefix` to keep S prefix-closed.
  bool AddShortPrefix(const Word& prefix);
  bool AddSuffix(const Word& suffix);

  // Queries every empty cell.
  void Fill(QueryCache& oracle);
  bool IsFilled() const;

  // Throws std::out_of_range when the row is unknown or not fully filled.
  const Row& RowOf(const Word& prefix) const;
  std::optional<Symbol> Cell(const Word& prefix, const Word& suffix) const;

 private:
  void EnsureRow(const Word& prefix);

  Alphabet alphabet_;
  std::vector<Word> short_;
  std::set<Word> short_set_;
  std::vector<Word> suffixes_;
  std::set<Word> suffix_set_;
  std::map<Word, Row> rows_;  // cells in suffix order; shorter when unfilled
};

// First boundary row (in row order) whose vector matches no short row.
std::optional<Word> FindUnclosed(const ObservationTable& table);

// Two short rows with equal vectors whose one-letter extensions differ; the
// returned suffix a·e separates them.
std::optional<Word> FindInconsistency(const ObservationTable& table);

// States are the distinct short-row vectors; the first short prefix with a
// vector represents it. Throws NotClosedError.
automata::MealyMachine BuildHypothesis(const ObservationTable& table);

// Adds every prefix of `counterexample` to S. Cells are filled on the next
// Fill().
ObservationTable RefineWithCounterexample(ObservationTable table,
                                          const Word& counterexample);

}  // namespace statefuzz::active

#endif  // STATEFUZZ_ACTIVE_OBSERVATION_TABLE_H_
