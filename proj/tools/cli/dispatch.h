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

#ifndef STATEFUZZ_TOOLS_CLI_DISPATCH_H_
#define STATEFUZZ_TOOLS_CLI_DISPATCH_H_

#include <ostream>
#include <string>
#include <vector>

namespace statefuzz::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRuntime = 2,
  kDistinguished = 3,
};

// Runs one subcommand. `args` excludes the program name. Primary output
// goes to `out` when no --out file is given; the resolved configuration and
// diagnostics go to `err`.
int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Blocks until SIGINT or SIGTERM. Defined in serve.cc.
int ServeBuiltin(const std::string& name, const std::string& bind, std::ostream& out,
                 std::ostream& err);

}  // namespace statefuzz::cli

#endif  // STATEFUZZ_TOOLS_CLI_DISPATCH_H_
