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

#include "statefuzz/sut/tcp_session.h"

#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <chrono>
#include <cstring>
#include <utility>

namespace statefuzz::sut {
namespace {

std::string ErrnoText(int err) { return std::strerror(err); }

}  // namespace

Endpoint Endpoint::Parse(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw ConfigError("endpoint '" + std::string(text) + "' is not host:port");
  }
  unsigned port = 0;
  const auto digits = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || port > 65535) {
    throw ConfigError("endpoint '" + std::string(text) + "' has an invalid port");
  }
  return Endpoint{std::string(text.substr(0, colon)), static_cast<std::uint16_t>(port)};
}

std::string Endpoint::ToString() const { return host + ":" + std::to_string(port); }

TcpSession::TcpSession(Endpoint endpoint, AbstractionConfig config)
    : endpoint_(std::move(endpoint)), config_(std::move(config)) {
  config_.Validate();
  descriptor_ = SutDescriptor{"tcp:" + endpoint_.ToString(), config_.InputAlphabet()};
}

TcpSession::~TcpSession() { Close(); }

void TcpSession::Close() {
  if (fd_ >= 0) ::close(fd_);
  fd_ = -1;
  buffer_.clear();
}

void TcpSession::Reset() {
  Close();

  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* results = nullptr;
  const std::string port = std::to_string(endpoint_.port);
  if (int rc = ::getaddrinfo(endpoint_.host.c_str(), port.c_str(), &hints, &results); rc != 0) {
    throw TransportError("cannot resolve " + endpoint_.ToString() + ": " + gai_strerror(rc));
  }
  int last_error = 0;
  for (addrinfo* ai = results; ai != nullptr; ai = ai->ai_next) {
    int fd = ::socket(ai->ai_family, ai->ai_socktype | SOCK_CLOEXEC, ai->ai_protocol);
    if (fd < 0) {
      last_error = errno;
      continue;
    }
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) {
      fd_ = fd;
      break;
    }
    last_error = errno;
    ::close(fd);
  }
  ::freeaddrinfo(results);
  if (fd_ < 0) {
    const std::string msg = "cannot connect to " + endpoint_.ToString() + ": " + ErrnoText(last_error);
    if (last_error == ECONNREFUSED) throw ConnectionRefusedError(msg);
    throw TransportError(msg);
  }
  int one = 1;
  ::setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));

  std::string banner;
  ReadLine(banner);  // absent banner is fine
}

TcpSession::ReadStatus TcpSession::ReadLine(std::string& line) {
  using Clock = std::chrono::steady_clock;
  const auto deadline = Clock::now() + std::chrono::milliseconds(config_.timeout_ms);
  while (true) {
    if (auto eol = buffer_.find('\n'); eol != std::string::npos) {
      line = buffer_.substr(0, eol);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      buffer_.erase(0, eol + 1);
      return ReadStatus::kLine;
    }
    const auto remaining =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
    if (remaining <= 0) return ReadStatus::kTimeout;
    pollfd pfd{fd_, POLLIN, 0};
    const int rc = ::poll(&pfd, 1, static_cast<int>(remaining));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw TransportError("poll failed: " + ErrnoText(errno));
    }
    if (rc == 0) return ReadStatus::kTimeout;
    char chunk[512];
    const ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw TransportError("receive failed: " + ErrnoText(errno));
    }
    if (n == 0) throw TransportError("connection closed by peer");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

Symbol TcpSession::Query(const Symbol& input) {
  const std::string request = config_.Render(input) + "\r\n";
  if (fd_ < 0) throw TransportError("query without an open connection; call Reset() first");
  std::size_t sent = 0;
  while (sent < request.size()) {
    const ssize_t n = ::send(fd_, request.data() + sent, request.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw TransportError("send failed: " + ErrnoText(errno));
    }
    sent += static_cast<std::size_t>(n);
  }
  std::string line;
  if (ReadLine(line) == ReadStatus::kTimeout) return config_.timeout_symbol;
  return config_.Classify(line);
}

std::unique_ptr<SutSession> OpenTcp(const Endpoint& endpoint, AbstractionConfig config) {
  auto session = std::make_unique<TcpSession>(endpoint, std::move(config));
  session->Reset();
  return session;
}

}  // namespace statefuzz::sut
