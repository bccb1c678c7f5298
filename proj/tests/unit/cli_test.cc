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

#include <filesystem>
#include <sstream>

#include "cli/dispatch.h"
#include "json.hpp"
#include "statefuzz/automata/equivalence.h"
#include "statefuzz/automata/serialization.h"
#include "statefuzz/fuzz/trace_log_io.h"
#include "statefuzz/sut/builtin.h"

namespace statefuzz::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = Dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("statefuzz_cli_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, LearnActiveWritesTheModel) {
  auto r = Call({"learn-active", "--sut", "builtin:varA", "--eq", "exhaustive", "--depth", "6",
                 "--out", Path("m.json"), "--log", Path("rounds.jsonl")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.err.find("\"eq\":\"exhaustive\""), std::string::npos);
  auto m = automata::ReadModelFile(Path("m.json"));
  EXPECT_TRUE(automata::CheckEquivalence(m, sut::BuiltinModel("varA")).equivalent());
  EXPECT_FALSE(automata::ReadTextFile(Path("rounds.jsonl")).empty());
}

TEST_F(CliTest, LearnActiveIsReproducible) {
  std::vector<std::string> args = {"learn-active", "--sut", "builtin:varB", "--eq",
                                   "random-walk",  "--seed", "9"};
  auto first = Call(args);
  ASSERT_EQ(first.code, kOk) << first.err;
  EXPECT_EQ(first.out, Call(args).out);
}

TEST_F(CliTest, LearnActiveWithAlphabet) {
  auto r = Call({"learn-active", "--sut", "builtin:varC", "--alphabet",
                 "USER,PASS,LIST,RNFR,RNTO,QUIT"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto m = automata::ParseModelJson(r.out);
  EXPECT_FALSE(m.inputs().Contains(automata::Symbol("MALFORMED")));
}

TEST_F(CliTest, DiffExitCodes) {
  automata::WriteTextFile(Path("a.json"), automata::ToModelJson(sut::BuiltinModel("varA")));
  automata::WriteTextFile(Path("b.json"), automata::ToModelJson(sut::BuiltinModel("varB")));
  auto same = Call({"diff", "--a", Path("a.json"), "--b", Path("a.json")});
  EXPECT_EQ(same.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(same.out)["verdict"], "equivalent");
  auto differ = Call({"diff", "--a", Path("a.json"), "--b", Path("b.json"), "--max-witnesses",
                      "2", "--out", Path("d.json")});
  EXPECT_EQ(differ.code, kDistinguished);
  auto j = nlohmann::json::parse(automata::ReadTextFile(Path("d.json")));
  EXPECT_EQ(j["witnesses"].size(), 2u);
  EXPECT_EQ(j["witnesses"][0]["inputs"], nlohmann::json({"USER", "PASS", "USER"}));
}

TEST_F(CliTest, CoverageOfEmptyLog) {
  automata::WriteTextFile(Path("m.json"), automata::ToModelJson(sut::BuiltinModel("varA")));
  automata::WriteTextFile(Path("empty.jsonl"), "");
  auto r = Call({"coverage", "--model", Path("m.json"), "--log", Path("empty.jsonl"), "--dot",
                 Path("c.dot")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["states_visited"], 0);
  EXPECT_TRUE(fs::exists(Path("c.dot")));
}

TEST_F(CliTest, FuzzPassiveCoveragePipeline) {
  auto fuzz = Call({"fuzz", "--sut", "builtin:varA", "--iterations", "300", "--seed", "4",
                    "--jobs", "2", "--out", Path("t.jsonl")});
  ASSERT_EQ(fuzz.code, kOk) << fuzz.err;
  EXPECT_EQ(fuzz::ReadTraceLog(Path("t.jsonl")).entries.size(), 300u);
  auto passive = Call({"learn-passive", "--traces", Path("t.jsonl"), "--out", Path("p.json"),
                       "--merge-log", Path("merges.jsonl")});
  ASSERT_EQ(passive.code, kOk) << passive.err;
  EXPECT_TRUE(fs::exists(Path("merges.jsonl")));
  automata::WriteTextFile(Path("m.json"), automata::ToModelJson(sut::BuiltinModel("varA")));
  auto guided = Call({"fuzz", "--sut", "builtin:varA", "--iterations", "0", "--guided-model",
                      Path("m.json"), "--out", Path("g.jsonl")});
  ASSERT_EQ(guided.code, kOk) << guided.err;
  auto cov = Call({"coverage", "--model", Path("m.json"), "--log", Path("g.jsonl"),
                   "--compare", Path("t.jsonl")});
  ASSERT_EQ(cov.code, kOk) << cov.err;
  auto j = nlohmann::json::parse(cov.out);
  EXPECT_EQ(j["log"]["states_visited"], 5);
}

TEST_F(CliTest, FuzzSeedsFile) {
  automata::WriteTextFile(Path("seeds.json"), R"([["USER","PASS"]])");
  auto r = Call({"fuzz", "--sut", "builtin:varA", "--seeds", Path("seeds.json"), "--iterations",
                 "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto log = fuzz::ParseJsonl(r.out);
  EXPECT_EQ(log.entries[0].trace.Inputs(), automata::MakeWord({"USER", "PASS"}));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({}).code, kUsage);
  EXPECT_EQ(Call({"teleport"}).code, kUsage);
  EXPECT_EQ(Call({"diff", "--a", Path("missing.json"), "--b", Path("missing.json")}).code,
            kUsage);
  EXPECT_EQ(Call({"learn-active", "--sut", "builtin:varA", "--frobnicate"}).code, kUsage);
  EXPECT_EQ(Call({"learn-active", "--sut", "builtin:varA", "--eq", "magic"}).code, kUsage);
  EXPECT_EQ(Call({"learn-active", "--sut", "serial:/dev/ttyS0"}).code, kUsage);
  EXPECT_EQ(Call({"learn-active", "--sut", "builtin:varA", "--eq", "exhaustive", "--depth",
                  "9"}).code,
            kUsage);
  EXPECT_EQ(Call({"fuzz", "--sut", "builtin:varA", "--malformed-ratio", "2"}).code, kUsage);
}

TEST_F(CliTest, RuntimeErrors) {
  auto r = Call({"learn-active", "--sut", "builtin:varZ"});
  EXPECT_EQ(r.code, kRuntime);
  EXPECT_NE(r.err.find("varZ"), std::string::npos);
  automata::WriteTextFile(Path("bad.json"), "{\"input_alphabet\": 3}");
  EXPECT_EQ(Call({"diff", "--a", Path("bad.json"), "--b", Path("bad.json")}).code, kRuntime);
  EXPECT_EQ(Call({"sut-serve", "--name", "varZ"}).code, kRuntime);
}

TEST_F(CliTest, HelpDocumentsEveryFlag) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> flags = {
      {"learn-active",
       {"--sut", "--abstraction", "--alphabet", "--eq", "--depth", "--walks", "--walk-len",
        "--seed", "--out", "--log"}},
      {"learn-passive", {"--traces", "--min-evidence", "--out", "--merge-log"}},
      {"fuzz",
       {"--sut", "--seeds", "--iterations", "--max-len", "--malformed-ratio", "--seed",
        "--guided-model", "--jobs", "--out"}},
      {"coverage", {"--model", "--log", "--out", "--dot"}},
      {"diff", {"--a", "--b", "--max-witnesses", "--out"}},
      {"sut-serve", {"--name", "--bind"}},
  };
  for (const auto& [command, names] : flags) {
    auto r = Call({command, "--help"});
    EXPECT_EQ(r.code, kOk) << command;
    for (const auto& flag : names) {
      EXPECT_NE(r.out.find(flag), std::string::npos) << command << " " << flag;
    }
  }
}

}  // namespace
}  // namespace statefuzz::cli
