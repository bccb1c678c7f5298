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

#include "cli/dispatch.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "statefuzz/active/learner.h"
#include "statefuzz/analysis/coverage.h"
#include "statefuzz/analysis/diff.h"
#include "statefuzz/automata/serialization.h"
#include "statefuzz/errors.h"
#include "statefuzz/fuzz/campaign.h"
#include "statefuzz/fuzz/trace_log_io.h"
#include "statefuzz/passive/state_merger.h"
#include "statefuzz/sut/abstraction.h"
#include "statefuzz/sut/builtin.h"
#include "statefuzz/sut/tcp_session.h"

namespace statefuzz::cli {
namespace {

using Json = nlohmann::ordered_json;

// Writes to `path`, or to `fallback` when no path was given.
void Emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    fallback.flush();
  } else {
    automata::WriteTextFile(path, text);
  }
}

void PrintConfig(std::ostream& err, std::string_view command, const Json& config) {
  err << "statefuzz " << command << ": config " << config.dump() << std::endl;
}

struct SutSpec {
  std::string text;
  std::string abstraction_path;

  // builtin:<name> or tcp:<host:port>.
  sut::SessionFactory Factory() const {
    if (text.rfind("builtin:", 0) == 0) {
      std::string name = text.substr(8);
      return [name] { return sut::OpenBuiltin(name); };
    }
    if (text.rfind("tcp:", 0) == 0) {
      sut::Endpoint endpoint = sut::Endpoint::Parse(text.substr(4));
      sut::AbstractionConfig abstraction = abstraction_path.empty()
                                               ? sut::IdentityAbstraction()
                                               : sut::ReadAbstractionConfig(abstraction_path);
      return [endpoint, abstraction] { return sut::OpenTcp(endpoint, abstraction); };
    }
    throw ConfigError("--sut must be builtin:<name> or tcp:<host:port>, got '" + text + "'");
  }
};

void AddSutOptions(CLI::App* cmd, SutSpec& spec) {
  cmd->add_option("--sut", spec.text, "System under test: builtin:<name> or tcp:<host:port>")
      ->required();
  cmd->add_option("--abstraction", spec.abstraction_path,
                  "Abstraction config JSON for tcp SUTs (default: identity mapping)")
      ->check(CLI::ExistingFile);
}

struct LearnActiveArgs {
  SutSpec sut;
  std::string alphabet;
  std::string eq = "w-method";
  unsigned depth = 2;
  unsigned walks = 1000;
  unsigned walk_len = 20;
  std::uint64_t seed = 0;
  std::string out;
  std::string log;
};

int RunLearnActive(const LearnActiveArgs& a, std::ostream& out, std::ostream& err) {
  active::EquivalenceConfig eq;
  eq.mode = active::EquivalenceModeFromString(a.eq);
  eq.depth_bound = a.depth;
  eq.walk_count = a.walks;
  eq.walk_length = a.walk_len;
  eq.seed = a.seed;
  eq.Validate();

  auto session = a.sut.Factory()();
  automata::Alphabet alphabet =
      a.alphabet.empty() ? session->descriptor().inputs
                         : automata::Alphabet(automata::ParseWord(a.alphabet));

  Json config;
  config["sut"] = a.sut.text;
  config["abstraction"] = a.sut.abstraction_path.empty() ? "identity" : a.sut.abstraction_path;
  std::vector<std::string> names;
  for (const auto& s : alphabet) names.push_back(s.name());
  config["alphabet"] = names;
  config["eq"] = active::ToString(eq.mode);
  config["depth"] = eq.depth_bound;
  config["walks"] = eq.walk_count;
  config["walk_len"] = eq.walk_length;
  config["seed"] = eq.seed;
  config["out"] = a.out.empty() ? "-" : a.out;
  PrintConfig(err, "learn-active", config);

  std::string round_log;
  auto result = active::LearnActive(*session, alphabet, eq, [&](const active::RoundLog& r) {
    round_log += active::ToJsonLine(r) + "\n";
  });
  if (!a.log.empty()) automata::WriteTextFile(a.log, round_log);
  err << "learned " << result.model.state_count() << " states in " << result.rounds.size()
      << " rounds; resets " << result.stats.resets << ", symbols " << result.stats.symbols
      << ", cache hits " << result.stats.cache_hits << std::endl;
  Emit(a.out, automata::ToModelJson(result.model), out);
  return kOk;
}

struct LearnPassiveArgs {
  std::string traces;
  std::uint64_t min_evidence = 0;
  std::string out;
  std::string merge_log;
};

int RunLearnPassive(const LearnPassiveArgs& a, std::ostream& out, std::ostream& err) {
  Json config;
  config["traces"] = a.traces;
  config["min_evidence"] = a.min_evidence;
  config["out"] = a.out.empty() ? "-" : a.out;
  PrintConfig(err, "learn-passive", config);

  auto log = fuzz::ReadTraceLog(a.traces);
  auto result = passive::LearnPassive(log, passive::MergeConfig{a.min_evidence});
  if (!a.merge_log.empty()) {
    std::string text;
    for (const auto& entry : result.merge_log) text += passive::ToJsonLine(entry) + "\n";
    automata::WriteTextFile(a.merge_log, text);
  }
  err << "prefix tree " << result.pta_nodes << " nodes, merged model "
      << result.model.state_count() << " states" << std::endl;
  Emit(a.out, automata::ToModelJson(result.model), out);
  return kOk;
}

struct FuzzArgs {
  SutSpec sut;
  std::string seeds;
  std::uint64_t iterations = 1000;
  std::size_t max_len = 12;
  double malformed_ratio = 0.05;
  std::uint64_t seed = 0;
  std::string guided_model;
  unsigned jobs = 1;
  std::string campaign = "campaign";
  std::string out;
};

int RunFuzz(const FuzzArgs& a, std::ostream& out, std::ostream& err) {
  fuzz::FuzzConfig cfg;
  cfg.seed = a.seed;
  cfg.iterations = a.iterations;
  cfg.max_trace_len = a.max_len;
  cfg.malformed_ratio = a.malformed_ratio;
  cfg.jobs = a.jobs;
  cfg.campaign = a.campaign;
  cfg.Validate();

  std::vector<automata::Word> seeds;
  if (!a.seeds.empty()) seeds = fuzz::ParseSeeds(automata::ReadTextFile(a.seeds));
  auto source = automata::TraceSource::kFuzz;
  if (!a.guided_model.empty()) {
    auto guided = fuzz::ModelGuidedTraces(automata::ReadModelFile(a.guided_model));
    seeds.insert(seeds.end(), guided.begin(), guided.end());
    source = automata::TraceSource::kGuided;
  }

  Json config = Json::parse(cfg.ToJson());
  config["sut"] = a.sut.text;
  config["seeds_file"] = a.seeds.empty() ? "" : a.seeds;
  config["seed_count"] = seeds.size();
  config["guided_model"] = a.guided_model;
  config["out"] = a.out.empty() ? "-" : a.out;
  PrintConfig(err, "fuzz", config);

  auto log = fuzz::FuzzCampaign(a.sut.Factory(), seeds, cfg, source);
  std::size_t aborted = std::count_if(log.entries.begin(), log.entries.end(),
                                      [](const auto& e) { return e.aborted; });
  err << "recorded " << log.entries.size() << " traces (" << aborted << " aborted)"
      << std::endl;
  Emit(a.out, fuzz::ToJsonl(log), out);
  return kOk;
}

struct CoverageArgs {
  std::string model;
  std::string log;
  std::string compare;
  std::string out;
  std::string dot;
};

int RunCoverage(const CoverageArgs& a, std::ostream& out, std::ostream& err) {
  Json config;
  config["model"] = a.model;
  config["log"] = a.log;
  config["compare"] = a.compare;
  config["out"] = a.out.empty() ? "-" : a.out;
  config["dot"] = a.dot;
  PrintConfig(err, "coverage", config);

  auto model = automata::ReadModelFile(a.model);
  auto report = analysis::Coverage(model, fuzz::ReadTraceLog(a.log), a.model);
  err << analysis::ToText(report);
  if (!a.dot.empty()) {
    automata::WriteTextFile(a.dot, analysis::ToAnnotatedDot(model, report));
  }
  if (a.compare.empty()) {
    Emit(a.out, analysis::ToJson(report), out);
    return kOk;
  }

  auto other = analysis::Coverage(model, fuzz::ReadTraceLog(a.compare), a.model);
  auto verdict = analysis::CompareReports(report, other);
  Json combined;
  combined["log"] = Json::parse(analysis::ToJson(report));
  combined["compare"] = Json::parse(analysis::ToJson(other));
  combined["verdict"] = verdict == analysis::Verdict::kFirstWins    ? "log"
                        : verdict == analysis::Verdict::kSecondWins ? "compare"
                                                                    : "tie";
  Emit(a.out, combined.dump(2) + "\n", out);
  return kOk;
}

struct DiffArgs {
  std::string a;
  std::string b;
  std::size_t max_witnesses = 5;
  std::string out;
};

int RunDiff(const DiffArgs& a, std::ostream& out, std::ostream& err) {
  Json config;
  config["a"] = a.a;
  config["b"] = a.b;
  config["max_witnesses"] = a.max_witnesses;
  config["out"] = a.out.empty() ? "-" : a.out;
  PrintConfig(err, "diff", config);

  auto report = analysis::Diff(automata::ReadModelFile(a.a), automata::ReadModelFile(a.b),
                               a.max_witnesses);
  err << analysis::ToText(report);
  Emit(a.out, analysis::ToJson(report), out);
  return report.equivalent() ? kOk : kDistinguished;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"statefuzz: learn, fuzz and compare Mealy models of stateful systems",
               "statefuzz"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::function<int()> run;

  LearnActiveArgs la;
  auto* cmd = app.add_subcommand("learn-active", "Infer a model by querying a SUT");
  AddSutOptions(cmd, la.sut);
  cmd->add_option("--alphabet", la.alphabet,
                  "Comma separated input symbols (default: the SUT's inputs)");
  cmd->add_option("--eq", la.eq, "Equivalence oracle")
      ->check(CLI::IsMember({"exhaustive", "w-method", "random-walk"}))
      ->capture_default_str();
  cmd->add_option("--depth", la.depth, "Depth bound for exhaustive and w-method")
      ->capture_default_str();
  cmd->add_option("--walks", la.walks, "Random walks per round")->capture_default_str();
  cmd->add_option("--walk-len", la.walk_len, "Random walk length")->capture_default_str();
  cmd->add_option("--seed", la.seed, "Random-walk seed")->capture_default_str();
  cmd->add_option("--out", la.out, "Model JSON output (default: stdout)");
  cmd->add_option("--log", la.log, "Per-round JSONL log");
  cmd->callback([&] { run = [&] { return RunLearnActive(la, out, err); }; });

  LearnPassiveArgs lp;
  cmd = app.add_subcommand("learn-passive", "Infer a model from a trace log");
  cmd->add_option("--traces", lp.traces, "Trace log (JSONL)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--min-evidence", lp.min_evidence, "Minimum merge score")
      ->capture_default_str();
  cmd->add_option("--out", lp.out, "Model JSON output (default: stdout)");
  cmd->add_option("--merge-log", lp.merge_log, "JSONL log of merge decisions");
  cmd->callback([&] { run = [&] { return RunLearnPassive(lp, out, err); }; });

  FuzzArgs fz;
  cmd = app.add_subcommand("fuzz", "Run a mutation campaign and record traces");
  AddSutOptions(cmd, fz.sut);
  cmd->add_option("--seeds", fz.seeds, "Seed traces: JSON array of symbol arrays")
      ->check(CLI::ExistingFile);
  cmd->add_option("--iterations", fz.iterations, "Mutated traces to run")->capture_default_str();
  cmd->add_option("--max-len", fz.max_len, "Maximum trace length")->capture_default_str();
  cmd->add_option("--malformed-ratio", fz.malformed_ratio,
                  "Per-step probability of replacing an input with MALFORMED")
      ->capture_default_str();
  cmd->add_option("--seed", fz.seed, "Campaign seed")->capture_default_str();
  cmd->add_option("--guided-model", fz.guided_model,
                  "Model whose state access sequences are added as seeds")
      ->check(CLI::ExistingFile);
  cmd->add_option("--jobs", fz.jobs, "Worker threads")->capture_default_str();
  cmd->add_option("--campaign", fz.campaign, "Campaign name for the log header")
      ->capture_default_str();
  cmd->add_option("--out", fz.out, "Trace log output (default: stdout)");
  cmd->callback([&] { run = [&] { return RunFuzz(fz, out, err); }; });

  CoverageArgs cv;
  cmd = app.add_subcommand("coverage", "Measure state coverage of a trace log");
  cmd->add_option("--model", cv.model, "Reference model JSON")->required()->check(CLI::ExistingFile);
  cmd->add_option("--log", cv.log, "Trace log (JSONL)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--compare", cv.compare, "Second trace log to rank against --log")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", cv.out, "Report JSON output (default: stdout)");
  cmd->add_option("--dot", cv.dot, "Annotated DOT output");
  cmd->callback([&] { run = [&] { return RunCoverage(cv, out, err); }; });

  DiffArgs df;
  cmd = app.add_subcommand("diff", "Compare two models");
  cmd->add_option("--a", df.a, "First model JSON")->required()->check(CLI::ExistingFile);
  cmd->add_option("--b", df.b, "Second model JSON")->required()->check(CLI::ExistingFile);
  cmd->add_option("--max-witnesses", df.max_witnesses, "Witness cap")->capture_default_str();
  cmd->add_option("--out", df.out, "Report JSON output (default: stdout)");
  cmd->callback([&] { run = [&] { return RunDiff(df, out, err); }; });

  std::string serve_name;
  std::string serve_bind = "127.0.0.1:0";
  cmd = app.add_subcommand("sut-serve", "Serve a built-in variant over TCP until interrupted");
  cmd->add_option("--name", serve_name, "Variant name (varA, varB, varC)")->required();
  cmd->add_option("--bind", serve_bind, "Listen address; port 0 picks a free port")
      ->capture_default_str();
  cmd->callback([&] {
    run = [&] {
      PrintConfig(err, "sut-serve", Json{{"name", serve_name}, {"bind", serve_bind}});
      return ServeBuiltin(serve_name, serve_bind, out, err);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << std::endl;
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << std::endl;
    return kRuntime;
  }
}

}  // namespace statefuzz::cli
