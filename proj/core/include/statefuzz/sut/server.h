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

#ifndef STATEFUZZ_SUT_SERVER_H_
#define STATEFUZZ_SUT_SERVER_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <thread>

#include "statefuzz/automata/mealy_machine.h"
#include "statefuzz/sut/tcp_session.h"

namespace statefuzz::sut {

class BindError : public TransportError {
 public:
  using TransportError::TransportError;
};

// Concrete response line for an abstract output, e.g. R331 ->
// "331 Password required".
std::string ResponseLine(const Symbol& output);
// Abstract input for a request line; unknown verbs map to MALFORMED.
Symbol RequestInput(std::string_view line);

// Serves a built-in variant over CRLF text lines: greeting "220 ready", then
// one response line per request line. Connections are multiplexed on one
// event-loop thread, each with its own machine state.
class BuiltinServer {
 public:
  using LogFn = std::function<void(std::string_view)>;

  // Binds immediately (port 0 picks a free port). Throws
  // UnknownVariantError or BindError.
  BuiltinServer(std::string_view variant, const Endpoint& bind, LogFn log = {});
  ~BuiltinServer();

  BuiltinServer(const BuiltinServer&) = delete;
  BuiltinServer& operator=(const BuiltinServer&) = delete;

  Endpoint endpoint() const { return bound_; }
  // Idempotent; closes every connection and joins the loop thread.
  void Stop();

 private:
  void Loop();

  automata::MealyMachine machine_;
  Endpoint bound_;
  LogFn log_;
  int listen_fd_ = -1;
  int wake_pipe_[2] = {-1, -1};
  std::atomic<bool> stopping_{false};
  std::thread thread_;
};

}  // namespace statefuzz::sut

#endif  // STATEFUZZ_SUT_SERVER_H_
