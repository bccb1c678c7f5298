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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit when
// any criterion fails.
//
// usage: statefuzz_acceptance <property-test-binary> <statefuzz-binary>

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "statefuzz/active/learner.h"
#include "statefuzz/analysis/coverage.h"
#include "statefuzz/analysis/diff.h"
#include "statefuzz/automata/equivalence.h"
#include "statefuzz/automata/serialization.h"
#include "statefuzz/fuzz/campaign.h"
#include "statefuzz/fuzz/trace_log_io.h"
#include "statefuzz/passive/state_merger.h"
#include "statefuzz/sut/abstraction.h"
#include "statefuzz/sut/builtin.h"
#include "support/oracles.h"

extern char** environ;

namespace statefuzz {
namespace {

namespace fs = std::filesystem;
using automata::CheckEquivalence;
using automata::MealyMachine;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

active::EquivalenceConfig Exhaustive6() {
  active::EquivalenceConfig cfg;
  cfg.mode = active::EquivalenceMode::kExhaustive;
  cfg.depth_bound = 6;
  return cfg;
}

void CoverageBenchmark(Verdict& v) {
  std::vector<automata::Transition> table;
  for (automata::StateId s = 0; s < 8; ++s) table.push_back({std::min<automata::StateId>(s + 1, 7), 0});
  MealyMachine line(automata::Alphabet{"next"}, automata::Alphabet{"ok"}, 8, 0, table);
  auto log_of = [](std::size_t steps) {
    automata::TraceLog log;
    automata::Word in(steps, automata::Symbol("next"));
    automata::Word out(steps, automata::Symbol("ok"));
    log.Append(automata::MakeTrace(in, out));
    return log;
  };
  auto start = Clock::now();
  auto cmp = analysis::CompareFuzzers(line, log_of(2), log_of(6));
  const double elapsed = Seconds(start);
  v.Require(cmp.first.state_fraction() == 0.375, "fuzzer A fraction 0.375");
  v.Require(cmp.second.state_fraction() == 0.875, "fuzzer B fraction 0.875");
  v.Require(cmp.verdict == analysis::Verdict::kSecondWins, "fuzzer B wins");
  v.Require(elapsed < 1.0, "runtime < 1 s");
  v.detail << "A " << cmp.first.states_visited << "/8=" << cmp.first.state_fraction() << ", B "
           << cmp.second.states_visited << "/8=" << cmp.second.state_fraction() << ", "
           << elapsed << " s";
}

void ActiveExactness(Verdict& v) {
  for (const auto& name : sut::BuiltinNames()) {
    auto start = Clock::now();
    auto sut = sut::OpenBuiltin(name);
    auto result = active::LearnActive(*sut, sut->descriptor().inputs, Exhaustive6());
    const double elapsed = Seconds(start);
    v.Require(result.model.state_count() == 5, name + " has 5 states");
    v.Require(CheckEquivalence(result.model, sut::BuiltinModel(name)).equivalent(),
              name + " equivalent");
    v.Require(elapsed < 10.0, name + " runtime < 10 s");
    v.detail << name << ": " << result.model.state_count() << " states, "
             << result.stats.symbols << " symbols, " << elapsed << " s; ";
  }
}

void PassiveExactness(Verdict& v) {
  for (const auto& name : sut::BuiltinNames()) {
    auto truth = sut::BuiltinModel(name);
    auto log = testing::ExhaustiveTraces(truth, 6);
    auto start = Clock::now();
    auto result = passive::LearnPassive(log);
    const double elapsed = Seconds(start);
    v.Require(CheckEquivalence(result.model, truth).equivalent(), name + " equivalent");
    v.Require(elapsed < 30.0, name + " runtime < 30 s");
    v.detail << name << ": " << log.entries.size() << " traces, " << result.pta_nodes
             << " tree nodes -> " << result.model.state_count() << " states, " << elapsed
             << " s; ";
  }
}

void Differential(Verdict& v) {
  auto start = Clock::now();
  auto a = sut::BuiltinModel("varA");
  auto b = sut::BuiltinModel("varB");
  auto report = analysis::Diff(a, b);
  v.Require(!report.equivalent(), "A vs B distinguished");
  if (!report.equivalent()) {
    const auto& w = report.witnesses.front().inputs;
    v.Require(w.size() == 3, "witness length 3");
    v.Require(testing::BruteShortestWitness(a, b, a.inputs(), 3) == w,
              "witness matches brute-force shortest");
    v.detail << "witness [" << automata::FormatWord(w) << "]; ";
  }
  for (const auto& name : sut::BuiltinNames()) {
    auto m = sut::BuiltinModel(name);
    v.Require(analysis::Diff(m, m).equivalent(), "self-diff " + name);
  }
  const double elapsed = Seconds(start);
  v.Require(elapsed < 1.0, "runtime < 1 s");
  v.detail << "self-diffs equivalent; " << elapsed << " s";
}

void ActiveVersusPassive(Verdict& v) {
  automata::Alphabet wellformed{"USER", "PASS", "LIST", "RNFR", "RNTO", "QUIT"};
  auto sut = sut::OpenBuiltin("varC");
  auto active_model = active::LearnActive(*sut, wellformed, Exhaustive6()).model;

  fuzz::FuzzConfig cfg;
  cfg.seed = 7;
  cfg.iterations = 2000;
  cfg.malformed_ratio = 0.1;
  auto log = fuzz::FuzzCampaign(*sut, fuzz::ModelGuidedTraces(sut::BuiltinModel("varC")), cfg);
  bool has_malformed = false;
  for (const auto& e : log.entries) {
    for (const auto& s : e.trace.steps) has_malformed |= s.input.name() == sut::kMalformed;
  }
  v.Require(has_malformed, "fuzz log contains MALFORMED");
  auto passive_model = passive::LearnPassive(log).model;

  auto report = analysis::Diff(active_model, passive_model);
  const automata::Symbol malformed{std::string(sut::kMalformed)};
  v.Require(report.only_a.empty(), "nothing exclusive to the active model");
  v.Require(report.only_b == std::vector<automata::Symbol>{malformed},
            "MALFORMED exclusive to the passive model");
  v.detail << "only active: [" << automata::FormatWord(report.only_a) << "], only passive: ["
           << automata::FormatWord(report.only_b) << "], shared-alphabet verdict "
           << (report.equivalent() ? "equivalent" : "distinguished");
}

void FuzzerBenchmarking(Verdict& v) {
  auto model = sut::BuiltinModel("varA");
  fuzz::FuzzConfig cfg;
  cfg.seed = 1;
  cfg.iterations = 2000;
  auto run = [&] {
    auto sut = sut::OpenBuiltin("varA");
    return fuzz::FuzzCampaign(*sut, {}, cfg);
  };
  auto log = run();
  auto report = analysis::Coverage(model, log);
  v.Require(report.states_visited == 5, "campaign covers 5/5");

  fuzz::FuzzConfig seeds_only = cfg;
  seeds_only.iterations = 0;
  auto sut = sut::OpenBuiltin("varA");
  auto guided = fuzz::FuzzCampaign(*sut, fuzz::ModelGuidedTraces(model), seeds_only,
                                   automata::TraceSource::kGuided);
  auto guided_report = analysis::Coverage(model, guided);
  v.Require(guided_report.states_visited == 5, "guided seeds cover 5/5");

  const fs::path dir = fs::temp_directory_path() / "statefuzz_acceptance";
  fs::create_directories(dir);
  fuzz::WriteTraceLog((dir / "first.jsonl").string(), log);
  fuzz::WriteTraceLog((dir / "second.jsonl").string(), run());
  const bool identical = automata::ReadTextFile((dir / "first.jsonl").string()) ==
                         automata::ReadTextFile((dir / "second.jsonl").string());
  v.Require(identical, "byte-identical logs");
  fs::remove_all(dir);
  v.detail << "campaign " << report.states_visited << "/5 (" << report.transitions_visited
           << "/35 transitions), guided seeds " << guided_report.states_visited << "/5 from "
           << guided.entries.size() << " traces, logs identical: " << (identical ? "yes" : "no");
}

void PropertySuites(Verdict& v, const std::string& binary) {
  const std::string command = "'" + binary + "' --gtest_brief=1 > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  v.Require(status == 0, "property binary exit status");
  v.detail << "property suites at 250 cases each: " << (status == 0 ? "all passed" : "failures");
}

// Starts `statefuzz sut-serve`, reads the bound port from its first line.
struct Server {
  pid_t pid = -1;
  std::uint16_t port = 0;
};

Server StartServer(const std::string& tool, const std::string& variant) {
  int fds[2];
  if (pipe(fds) != 0) return {};
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
  posix_spawn_file_actions_addclose(&actions, fds[0]);
  posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, "/dev/null", O_WRONLY, 0);
  std::vector<std::string> args = {tool, "sut-serve", "--name", variant, "--bind",
                                   "127.0.0.1:0"};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  Server server;
  if (posix_spawn(&server.pid, tool.c_str(), &actions, nullptr, argv.data(), environ) != 0) {
    server.pid = -1;
  }
  posix_spawn_file_actions_destroy(&actions);
  close(fds[1]);
  std::string line;
  char c = 0;
  while (read(fds[0], &c, 1) == 1 && c != '\n') line.push_back(c);
  close(fds[0]);
  if (auto colon = line.rfind(':'); colon != std::string::npos) {
    server.port = static_cast<std::uint16_t>(std::stoi(line.substr(colon + 1)));
  }
  return server;
}

void Loopback(Verdict& v, const std::string& tool) {
  const fs::path dir = fs::temp_directory_path() / "statefuzz_loopback";
  fs::create_directories(dir);
  const std::string abstraction = (dir / "identity.json").string();
  const std::string model_path = (dir / "model.json").string();
  automata::WriteTextFile(abstraction, sut::ToJson(sut::IdentityAbstraction()));

  auto start = Clock::now();
  Server server = StartServer(tool, "varA");
  v.Require(server.pid > 0 && server.port != 0, "server started");
  if (server.port != 0) {
    const std::string command = "'" + tool + "' learn-active --sut tcp:127.0.0.1:" +
                                std::to_string(server.port) + " --abstraction '" +
                                abstraction + "' --out '" + model_path + "' 2> /dev/null";
    const int status = std::system(command.c_str());
    v.Require(status == 0, "learn-active exit 0");
    if (status == 0) {
      auto model = automata::ReadModelFile(model_path);
      v.Require(CheckEquivalence(model, sut::BuiltinModel("varA")).equivalent(),
                "equivalent to varA");
      v.detail << model.state_count() << " states over TCP; ";
    }
  }
  if (server.pid > 0) {
    kill(server.pid, SIGINT);
    int status = 0;
    waitpid(server.pid, &status, 0);
    v.Require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "server clean shutdown");
  }
  const double elapsed = Seconds(start);
  v.Require(elapsed < 30.0, "runtime < 30 s");
  v.detail << elapsed << " s";
  fs::remove_all(dir);
}

}  // namespace
}  // namespace statefuzz

int main(int argc, char** argv) {
  using namespace statefuzz;
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <property-test-binary> <statefuzz-binary>\n";
    return 2;
  }
  const std::string property_binary = argv[1];
  const std::string tool = argv[2];

  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"coverage benchmark (3 vs 7 of 8 states)", CoverageBenchmark},
      {"active learning recovers varA/varB/varC", ActiveExactness},
      {"passive learning recovers varA/varB/varC", PassiveExactness},
      {"differential testing varA vs varB", Differential},
      {"active vs passive alphabet divergence on varC", ActiveVersusPassive},
      {"fuzzer benchmarking on varA", FuzzerBenchmarking},
      {"property suites", [&](Verdict& v) { PropertySuites(v, property_binary); }},
      {"TCP loopback learning", [&](Verdict& v) { Loopback(v, tool); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.Require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " " << (v.pass ? "PASS" : "FAIL") << ": "
              << criteria[i].first << ": " << v.detail.str() << std::endl;
    if (!v.pass) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
