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

#include <gtest/gtest.h>

#include "json.hpp"
#include "statefuzz/analysis/coverage.h"
#include "statefuzz/analysis/diff.h"
#include "statefuzz/sut/builtin.h"
#include "support/oracles.h"

namespace statefuzz::analysis {
namespace {

using automata::MakeTrace;
using automata::MakeWord;
using automata::TraceLog;

// States 0..7 in a line; "next" advances, the last state loops.
MealyMachine Line8() {
  std::vector<automata::Transition> table;
  for (StateId s = 0; s < 8; ++s) table.push_back({std::min<StateId>(s + 1, 7), 0});
  return MealyMachine(automata::Alphabet{"next"}, automata::Alphabet{"ok"}, 8, 0, table);
}

TraceLog LineLog(std::size_t steps) {
  TraceLog log;
  automata::Word in, out;
  for (std::size_t i = 0; i < steps; ++i) {
    in.push_back(Symbol("next"));
    out.push_back(Symbol("ok"));
  }
  log.Append(MakeTrace(in, out));
  return log;
}

TraceLog Log(std::initializer_list<std::pair<std::initializer_list<std::string_view>,
                                             std::initializer_list<std::string_view>>>
                 traces) {
  TraceLog log;
  for (const auto& [in, out] : traces) log.Append(MakeTrace(MakeWord(in), MakeWord(out)));
  return log;
}

TEST(CoverageTest, ThreeVersusSevenOfEight) {
  auto model = Line8();
  auto cmp = CompareFuzzers(model, LineLog(2), LineLog(6));
  EXPECT_EQ(cmp.first.states_visited, 3u);
  EXPECT_DOUBLE_EQ(cmp.first.state_fraction(), 0.375);
  EXPECT_EQ(cmp.second.states_visited, 7u);
  EXPECT_DOUBLE_EQ(cmp.second.state_fraction(), 0.875);
  EXPECT_EQ(cmp.verdict, Verdict::kSecondWins);
}

TEST(CoverageTest, EmptyLogVisitsNothing) {
  auto r = Coverage(sut::BuiltinModel("varA"), TraceLog{});
  EXPECT_EQ(r.states_visited, 0u);
  EXPECT_EQ(r.states_total, 5u);
  EXPECT_EQ(r.per_state_hits.size(), 5u);
  EXPECT_DOUBLE_EQ(r.state_fraction(), 0.0);
}

TEST(CoverageTest, EmptyTraceStillOccupiesTheInitialState) {
  auto r = Coverage(sut::BuiltinModel("varA"), Log({{{}, {}}}));
  EXPECT_EQ(r.states_visited, 1u);
  EXPECT_EQ(r.transitions_visited, 0u);
}

TEST(CoverageTest, VariantAReplayExample) {
  auto model = sut::BuiltinModel("varA");
  auto log = Log({{{"USER"}, {"R331"}},
                  {{"USER", "PASS", "LIST"}, {"R331", "R230", "R150"}}});
  auto r = Coverage(model, log, "varA");
  EXPECT_EQ(r.states_visited, 3u);
  EXPECT_EQ(r.transitions_total, 35u);
  EXPECT_EQ(r.transitions_visited, 3u);
  EXPECT_EQ(r.divergent_steps, 0u);
  EXPECT_EQ(r.total_steps, 4u);
  const StateId q1 = model.StateAfter(MakeWord({"USER"}));
  const StateId q2 = model.StateAfter(MakeWord({"USER", "PASS"}));
  EXPECT_EQ(r.visited_states, (std::vector<StateId>{0, std::min(q1, q2), std::max(q1, q2)}));
  EXPECT_EQ(r.per_state_hits.at(0), 2u);
  EXPECT_EQ(r.per_state_hits.at(q1), 1u);
  EXPECT_EQ(r.per_state_hits.at(q2), 1u);
  EXPECT_EQ(r.visited_states.size(), testing::BruteVisitedStates(model, log).size());
}

TEST(CoverageTest, DivergenceEndsTheWalk) {
  auto model = sut::BuiltinModel("varA");
  auto r = Coverage(model, Log({{{"USER", "PASS", "LIST"}, {"R331", "R530", "R150"}},
                                {{"NOOP", "USER"}, {"R500", "R331"}}}));
  EXPECT_EQ(r.divergent_steps, 2u);
  EXPECT_EQ(r.states_visited, 2u);
  EXPECT_EQ(r.transitions_visited, 1u);
}

TEST(CoverageTest, VerdictTieBreaks) {
  CoverageReport a, b;
  a.states_visited = b.states_visited = 4;
  a.transitions_visited = 9;
  b.transitions_visited = 8;
  EXPECT_EQ(CompareReports(a, b), Verdict::kFirstWins);
  b.transitions_visited = 9;
  a.total_steps = 100;
  b.total_steps = 50;
  EXPECT_EQ(CompareReports(a, b), Verdict::kSecondWins);
  b.total_steps = 100;
  EXPECT_EQ(CompareReports(a, b), Verdict::kTie);
  auto log = LineLog(3);
  EXPECT_EQ(CompareFuzzers(Line8(), log, log).verdict, Verdict::kTie);
}

TEST(CoverageTest, ReportRenderings) {
  auto model = sut::BuiltinModel("varA");
  auto r = Coverage(model, Log({{{"USER"}, {"R331"}}}), "m.json");
  auto j = nlohmann::json::parse(ToJson(r));
  EXPECT_EQ(j["model_id"], "m.json");
  EXPECT_EQ(j["states_visited"], 2);
  EXPECT_EQ(j["per_state_hits"]["0"], 1);
  EXPECT_EQ(j["per_state_hits"].size(), 5u);
  EXPECT_NE(ToText(r).find("states visited: 2/5"), std::string::npos);
  const std::string dot = ToAnnotatedDot(model, r);
  EXPECT_NE(dot.find("filled"), std::string::npos);
  EXPECT_NE(dot.find("1 hits"), std::string::npos);
}

TEST(DiffTest, SelfDiffIsEquivalent) {
  for (const auto& name : sut::BuiltinNames()) {
    auto m = sut::BuiltinModel(name);
    auto r = Diff(m, m);
    EXPECT_TRUE(r.equivalent()) << name;
    EXPECT_TRUE(r.only_a.empty());
    EXPECT_TRUE(r.only_b.empty());
  }
}

TEST(DiffTest, VariantAVersusB) {
  auto a = sut::BuiltinModel("varA");
  auto b = sut::BuiltinModel("varB");
  auto r = Diff(a, b, 4);
  ASSERT_EQ(r.witnesses.size(), 4u);
  EXPECT_EQ(r.witnesses[0].inputs, MakeWord({"USER", "PASS", "USER"}));
  EXPECT_EQ(r.witnesses[0].outputs_a.back().name(), "R331");
  EXPECT_EQ(r.witnesses[0].outputs_b.back().name(), "R503");
  EXPECT_EQ(testing::BruteShortestWitness(a, b, a.inputs(), 3), r.witnesses[0].inputs);
  for (const auto& w : r.witnesses) {
    EXPECT_NE(a.Run(w.inputs), b.Run(w.inputs));
    EXPECT_EQ(w.outputs_a, a.Run(w.inputs));
  }
  EXPECT_EQ(r.states_a, 5u);
  EXPECT_EQ(r.states_b, 5u);
  EXPECT_EQ(Diff(a, b, 1).witnesses.size(), 1u);
}

TEST(DiffTest, AlphabetDifferencesAreReportedNotFatal) {
  auto a = sut::BuiltinModel("varA");
  auto restricted = automata::Restrict(sut::BuiltinModel("varC"),
                                       automata::Alphabet{"USER", "PASS", "LIST", "RNFR",
                                                          "RNTO", "QUIT"});
  auto r = Diff(restricted, a);
  EXPECT_TRUE(r.equivalent());
  EXPECT_TRUE(r.only_a.empty());
  ASSERT_EQ(r.only_b.size(), 1u);
  EXPECT_EQ(r.only_b[0].name(), "MALFORMED");
  auto j = nlohmann::json::parse(ToJson(r));
  EXPECT_EQ(j["verdict"], "equivalent");
  EXPECT_EQ(j["alphabet_diff"]["only_b"][0], "MALFORMED");
  EXPECT_NE(ToText(r).find("inputs only in b: MALFORMED"), std::string::npos);
}

}  // namespace
}  // namespace statefuzz::analysis
