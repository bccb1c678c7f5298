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

#include "statefuzz/fuzz/campaign.h"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>
#include <utility>

namespace statefuzz::fuzz {
namespace {

using automata::Trace;
using automata::TraceEntry;
using automata::TraceLog;
using automata::TraceSource;

std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Shard {
  std::vector<TraceEntry> entries;
};

class Worker {
 public:
  Worker(sut::SutSession& session, const FuzzConfig& config, TraceSource source,
         unsigned worker_id)
      : session_(session),
        config_(config),
        source_(source),
        rng_(Mix(config.seed ^ Mix(worker_id))),
        alphabet_(session.descriptor().inputs) {}

  void Run(const std::vector<Word>& seeds, bool execute_seeds, std::uint64_t iterations) {
    for (const Word& seed : seeds) {
      Word trimmed = seed;
      if (trimmed.size() > config_.max_trace_len) {
        trimmed.erase(trimmed.begin() + static_cast<std::ptrdiff_t>(config_.max_trace_len),
                      trimmed.end());
      }
      queue_.push_back(trimmed);
      if (execute_seeds) Execute(trimmed);
    }
    if (queue_.empty()) queue_.emplace_back();
    for (std::uint64_t i = 0; i < iterations; ++i) {
      const Word& parent = queue_[static_cast<std::size_t>(rng_() % queue_.size())];
      Word child = MutateTrace(parent, rng_, config_, alphabet_);
      if (Execute(child)) queue_.push_back(std::move(child));
    }
  }

  std::vector<TraceEntry>& entries() { return entries_; }

 private:
  // Runs one trace and records it; returns whether it showed new behaviour.
  bool Execute(const Word& inputs) {
    Word outputs;
    bool aborted = false;
    try {
      outputs = sut::RunTrace(session_, inputs);
    } catch (const sut::TraceAbortedError& e) {
      outputs = e.partial_outputs();
      aborted = true;
    } catch (const sut::TransportError&) {
      aborted = true;
    }
    const Word observed_inputs(inputs.begin(),
                               inputs.begin() + static_cast<std::ptrdiff_t>(outputs.size()));
    Trace trace = automata::MakeTrace(observed_inputs, outputs, source_);
    entries_.push_back(TraceEntry{0, std::move(trace), aborted});

    bool novel = false;
    Word prefix;
    for (const Symbol& out : outputs) {
      prefix.push_back(out);
      if (seen_.insert(prefix).second) novel = true;
    }
    return novel;
  }

  sut::SutSession& session_;
  const FuzzConfig& config_;
  TraceSource source_;
  Rng rng_;
  Alphabet alphabet_;
  std::vector<Word> queue_;
  std::set<Word> seen_;
  std::vector<TraceEntry> entries_;
};

TraceLog Assemble(std::vector<std::vector<TraceEntry>> shards, const FuzzConfig& config,
                  const std::string& sut_name) {
  TraceLog log;
  log.header.campaign = config.campaign;
  log.header.sut = sut_name;
  log.header.seed = config.seed;
  log.header.config_json = config.ToJson();
  for (auto& shard : shards) {
    for (auto& entry : shard) log.Append(std::move(entry.trace), entry.aborted);
  }
  return log;
}

}  // namespace

TraceLog FuzzCampaign(const sut::SessionFactory& factory, const std::vector<Word>& seeds,
                      const FuzzConfig& config, TraceSource source) {
  config.Validate();
  const unsigned jobs = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(config.jobs, config.iterations)));
  std::vector<std::vector<TraceEntry>> shards(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::string sut_name;

  auto run_shard = [&](unsigned w, sut::SutSession& session) {
    const std::uint64_t lo = config.iterations * w / jobs;
    const std::uint64_t hi = config.iterations * (w + 1) / jobs;
    Worker worker(session, config, source, w);
    worker.Run(seeds, w == 0, hi - lo);
    shards[w] = std::move(worker.entries());
  };

  std::vector<std::unique_ptr<sut::SutSession>> sessions;
  for (unsigned w = 0; w < jobs; ++w) sessions.push_back(factory());
  sut_name = sessions.front()->descriptor().name;

  if (jobs == 1) {
    run_shard(0, *sessions.front());
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) {
      threads.emplace_back([&, w] {
        try {
          run_shard(w, *sessions[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return Assemble(std::move(shards), config, sut_name);
}

TraceLog FuzzCampaign(sut::SutSession& session, const std::vector<Word>& seeds,
                      const FuzzConfig& config, TraceSource source) {
  FuzzConfig single = config;
  single.jobs = 1;
  single.Validate();
  Worker worker(session, single, source, 0);
  worker.Run(seeds, true, single.iterations);
  std::vector<std::vector<TraceEntry>> shards;
  shards.push_back(std::move(worker.entries()));
  return Assemble(std::move(shards), single, session.descriptor().name);
}

std::vector<Word> ModelGuidedTraces(const automata::MealyMachine& model) {
  return automata::AccessSequences(model);
}

}  // namespace statefuzz::fuzz
