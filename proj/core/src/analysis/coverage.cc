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

#include "statefuzz/analysis/coverage.h"

#include <sstream>
#include <tuple>
#include <utility>

#include "json.hpp"

#include "statefuzz/automata/serialization.h"

namespace statefuzz::analysis {
namespace {

double Fraction(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

double CoverageReport::state_fraction() const {
  return Fraction(states_visited, states_total);
}

double CoverageReport::transition_fraction() const {
  return Fraction(transitions_visited, transitions_total);
}

CoverageReport Coverage(const MealyMachine& model, const TraceLog& log,
                        std::string model_id) {
  CoverageReport report;
  report.model_id = std::move(model_id);
  report.states_total = model.state_count();
  report.transitions_total = model.transition_count();
  report.traces = log.entries.size();
  for (StateId s = 0; s < model.state_count(); ++s) report.per_state_hits[s] = 0;

  std::vector<bool> state_seen(model.state_count(), false);
  std::vector<bool> edge_seen(model.transition_count(), false);
  if (!log.entries.empty()) state_seen[model.initial_state()] = true;

  const std::size_t k = model.inputs().size();
  for (const auto& entry : log.entries) {
    report.total_steps += entry.trace.steps.size();
    StateId state = model.initial_state();
    for (const auto& step : entry.trace.steps) {
      ++report.per_state_hits[state];
      auto input = model.inputs().IndexOf(step.input);
      if (!input || model.OutputOf(state, *input) != step.output) {
        ++report.divergent_steps;
        break;
      }
      edge_seen[state * k + *input] = true;
      state = model.Next(state, *input);
      state_seen[state] = true;
    }
  }

  for (StateId s = 0; s < state_seen.size(); ++s) {
    if (state_seen[s]) report.visited_states.push_back(s);
  }
  report.states_visited = report.visited_states.size();
  for (bool seen : edge_seen) report.transitions_visited += seen ? 1 : 0;
  return report;
}

std::string ToJson(const CoverageReport& r) {
  nlohmann::ordered_json j;
  j["model_id"] = r.model_id;
  j["states_total"] = r.states_total;
  j["states_visited"] = r.states_visited;
  j["state_fraction"] = r.state_fraction();
  j["transitions_total"] = r.transitions_total;
  j["transitions_visited"] = r.transitions_visited;
  j["transition_fraction"] = r.transition_fraction();
  j["visited_states"] = r.visited_states;
  nlohmann::ordered_json hits = nlohmann::ordered_json::object();
  for (const auto& [state, count] : r.per_state_hits) {
    hits[std::to_string(state)] = count;
  }
  j["per_state_hits"] = std::move(hits);
  j["divergent_steps"] = r.divergent_steps;
  j["total_steps"] = r.total_steps;
  j["traces"] = r.traces;
  return j.dump(2) + "\n";
}

std::string ToText(const CoverageReport& r) {
  std::ostringstream out;
  out << "model " << r.model_id << "\n"
      << "states visited: " << r.states_visited << "/" << r.states_total << " ("
      << r.state_fraction() << ")\n"
      << "transitions visited: " << r.transitions_visited << "/"
      << r.transitions_total << " (" << r.transition_fraction() << ")\n"
      << "traces: " << r.traces << ", steps: " << r.total_steps
      << ", divergent: " << r.divergent_steps << "\n";
  for (const auto& [state, count] : r.per_state_hits) {
    out << "  s" << state << ": " << count << " hits\n";
  }
  return out.str();
}

std::string ToAnnotatedDot(const MealyMachine& model, const CoverageReport& report) {
  automata::DotStyle style;
  for (StateId s = 0; s < model.state_count(); ++s) {
    auto it = report.per_state_hits.find(s);
    std::uint64_t hits = it == report.per_state_hits.end() ? 0 : it->second;
    style.state_labels[s] = std::to_string(hits) + " hits";
    style.filled[s] = false;
  }
  for (StateId s : report.visited_states) style.filled[s] = true;
  return automata::ToDot(model, style);
}

Verdict CompareReports(const CoverageReport& first, const CoverageReport& second) {
  // Fewer steps is better, hence the swapped operands in the last slot.
  auto key_a = std::make_tuple(first.states_visited, first.transitions_visited,
                               second.total_steps);
  auto key_b = std::make_tuple(second.states_visited, second.transitions_visited,
                               first.total_steps);
  if (key_a > key_b) return Verdict::kFirstWins;
  if (key_b > key_a) return Verdict::kSecondWins;
  return Verdict::kTie;
}

FuzzerComparison CompareFuzzers(const MealyMachine& model, const TraceLog& first,
                                const TraceLog& second) {
  FuzzerComparison result;
  result.first = Coverage(model, first, "first");
  result.second = Coverage(model, second, "second");
  result.verdict = CompareReports(result.first, result.second);
  return result;
}

}  // namespace statefuzz::analysis
