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

#include "statefuzz/analysis/diff.h"

#include <sstream>

#include "json.hpp"

#include "statefuzz/automata/equivalence.h"

namespace statefuzz::analysis {
namespace {

std::vector<std::string> Names(const std::vector<Symbol>& symbols) {
  std::vector<std::string> names;
  for (const auto& s : symbols) names.push_back(s.name());
  return names;
}

}  // namespace

DiffReport Diff(const automata::MealyMachine& a, const automata::MealyMachine& b,
                std::size_t max_witnesses) {
  DiffReport report;
  report.states_a = a.state_count();
  report.states_b = b.state_count();

  automata::Alphabet shared;
  for (const auto& s : a.inputs()) {
    if (b.inputs().Contains(s)) {
      shared.Add(s);
    } else {
      report.only_a.push_back(s);
    }
  }
  for (const auto& s : b.inputs()) {
    if (!a.inputs().Contains(s)) report.only_b.push_back(s);
  }
  report.shared_inputs = shared.symbols();

  for (auto& word : automata::FindDisagreements(a, b, shared, max_witnesses)) {
    Witness w;
    w.outputs_a = a.Run(word);
    w.outputs_b = b.Run(word);
    w.inputs = std::move(word);
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

std::string ToJson(const DiffReport& r) {
  nlohmann::ordered_json j;
  j["verdict"] = r.equivalent() ? "equivalent" : "distinguished";
  j["state_counts"] = {r.states_a, r.states_b};
  j["alphabet_diff"] = {{"only_a", Names(r.only_a)}, {"only_b", Names(r.only_b)}};
  j["shared_inputs"] = Names(r.shared_inputs);
  auto witnesses = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json item;
    item["inputs"] = Names(w.inputs);
    item["outputs_a"] = Names(w.outputs_a);
    item["outputs_b"] = Names(w.outputs_b);
    witnesses.push_back(std::move(item));
  }
  j["witnesses"] = std::move(witnesses);
  return j.dump(2) + "\n";
}

std::string ToText(const DiffReport& r) {
  std::ostringstream out;
  out << "verdict: " << (r.equivalent() ? "equivalent" : "distinguished") << "\n"
      << "states: " << r.states_a << " vs " << r.states_b << "\n";
  if (!r.only_a.empty()) out << "inputs only in a: " << automata::FormatWord(r.only_a) << "\n";
  if (!r.only_b.empty()) out << "inputs only in b: " << automata::FormatWord(r.only_b) << "\n";
  for (const auto& w : r.witnesses) {
    out << "  [" << automata::FormatWord(w.inputs) << "]\n"
        << "    a: " << automata::FormatWord(w.outputs_a) << "\n"
        << "    b: " << automata::FormatWord(w.outputs_b) << "\n";
  }
  return out.str();
}

}  // namespace statefuzz::analysis
