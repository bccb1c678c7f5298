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

#ifndef STATEFUZZ_SUT_TCP_SESSION_H_
#define STATEFUZZ_SUT_TCP_SESSION_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "statefuzz/sut/abstraction.h"
#include "statefuzz/sut/session.h"

namespace statefuzz::sut {

struct Endpoint {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;

  // "host:port"; throws ConfigError.
  static Endpoint Parse(std::string_view text);
  std::string ToString() const;
};

// Line-oriented TCP client. Reset() opens a fresh connection and swallows
// the banner line if one arrives within the timeout; Query() sends the
// rendered template and classifies the first response line.
class TcpSession : public SutSession {
 public:
  TcpSession(Endpoint endpoint, AbstractionConfig config);
  ~TcpSession() override;

  TcpSession(const TcpSession&) = delete;
  TcpSession& operator=(const TcpSession&) = delete;

  void Reset() override;
  Symbol Query(const Symbol& input) override;
  const SutDescriptor& descriptor() const override { return descriptor_; }

 private:
  enum class ReadStatus { kLine, kTimeout };

  void Close();
  ReadStatus ReadLine(std::string& line);

  Endpoint endpoint_;
  AbstractionConfig config_;
  SutDescriptor descriptor_;
  int fd_ = -1;
  std::string buffer_;
};

// Connects once to check reachability. Throws ConnectionRefusedError.
std::unique_ptr<SutSession> OpenTcp(const Endpoint& endpoint,
                                    AbstractionConfig config);

}  // namespace statefuzz::sut

#endif  // STATEFUZZ_SUT_TCP_SESSION_H_
