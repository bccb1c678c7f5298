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

#include <pthread.h>
#include <signal.h>

#include <ostream>
#include <string>

#include "cli/dispatch.h"
#include "statefuzz/errors.h"
#include "statefuzz/sut/server.h"
#include "statefuzz/sut/session.h"
#include "statefuzz/sut/tcp_session.h"

namespace statefuzz::cli {

int ServeBuiltin(const std::string& name, const std::string& bind, std::ostream& out,
                 std::ostream& err) {
  // Mask the signals before the server thread starts so only sigwait sees them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &signals, &previous);

  int code = kOk;
  try {
    sut::BuiltinServer server(name, sut::Endpoint::Parse(bind),
                              [&err](std::string_view line) { err << line << std::endl; });
    out << "listening on " << server.endpoint().ToString() << std::endl;
    int received = 0;
    sigwait(&signals, &received);
    err << "received signal " << received << ", shutting down" << std::endl;
    server.Stop();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << std::endl;
    code = kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << std::endl;
    code = kRuntime;
  }
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
  return code;
}

}  // namespace statefuzz::cli
