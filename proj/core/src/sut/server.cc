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

#include "statefuzz/sut/server.h"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <map>
#include <vector>

#include "statefuzz/sut/builtin.h"

namespace statefuzz::sut {
namespace {

const std::map<std::string, std::string, std::less<>>& ResponseTexts() {
  static const std::map<std::string, std::string, std::less<>> texts = {
      {"R150", "150 Opening data connection"},  {"R220", "220 ready"},
      {"R221", "221 Goodbye"},                  {"R230", "230 Login successful"},
      {"R250", "250 Rename successful"},        {"R331", "331 Password required"},
      {"R350", "350 Ready for RNTO"},           {"R421", "421 Service not available"},
      {"R500", "500 unknown"},                  {"R503", "503 Bad sequence of commands"},
      {"R530", "530 Not logged in"},
  };
  return texts;
}

void SetNonBlocking(int fd) { ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL, 0) | O_NONBLOCK); }

struct Connection {
  std::uint64_t id = 0;
  automata::StateId state = 0;
  std::string in;
  std::string out;
};

}  // namespace

std::string ResponseLine(const Symbol& output) {
  const auto& texts = ResponseTexts();
  if (auto it = texts.find(output.name()); it != texts.end()) return it->second;
  return "500 unknown";
}

Symbol RequestInput(std::string_view line) {
  const auto verb = line.substr(0, line.find(' '));
  for (std::string_view known : {"USER", "PASS", "LIST", "RNFR", "RNTO", "QUIT"}) {
    if (verb == known) return Symbol(std::string(known));
  }
  return Symbol(std::string(kMalformed));
}

BuiltinServer::BuiltinServer(std::string_view variant, const Endpoint& bind, LogFn log)
    : machine_(BuiltinModel(variant)), bound_(bind), log_(std::move(log)) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  hints.ai_flags = AI_PASSIVE;
  addrinfo* results = nullptr;
  const std::string port = std::to_string(bind.port);
  if (int rc = ::getaddrinfo(bind.host.c_str(), port.c_str(), &hints, &results); rc != 0) {
    throw BindError("cannot resolve " + bind.ToString() + ": " + gai_strerror(rc));
  }
  int last_error = 0;
  for (addrinfo* ai = results; ai != nullptr && listen_fd_ < 0; ai = ai->ai_next) {
    int fd = ::socket(ai->ai_family, ai->ai_socktype | SOCK_CLOEXEC, ai->ai_protocol);
    if (fd < 0) {
      last_error = errno;
      continue;
    }
    int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 128) == 0) {
      listen_fd_ = fd;
    } else {
      last_error = errno;
      ::close(fd);
    }
  }
  ::freeaddrinfo(results);
  if (listen_fd_ < 0) {
    throw BindError("cannot bind " + bind.ToString() + ": " + std::strerror(last_error));
  }

  sockaddr_storage addr{};
  socklen_t len = sizeof(addr);
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  if (addr.ss_family == AF_INET) {
    bound_.port = ntohs(reinterpret_cast<sockaddr_in*>(&addr)->sin_port);
  } else if (addr.ss_family == AF_INET6) {
    bound_.port = ntohs(reinterpret_cast<sockaddr_in6*>(&addr)->sin6_port);
  }
  SetNonBlocking(listen_fd_);

  if (::pipe2(wake_pipe_, O_CLOEXEC | O_NONBLOCK) != 0) {
    ::close(listen_fd_);
    throw BindError(std::string("pipe failed: ") + std::strerror(errno));
  }
  thread_ = std::thread([this] { Loop(); });
}

BuiltinServer::~BuiltinServer() { Stop(); }

void BuiltinServer::Stop() {
  if (!stopping_.exchange(true)) {
    const char byte = 'x';
    [[maybe_unused]] auto n = ::write(wake_pipe_[1], &byte, 1);
  }
  if (thread_.joinable()) thread_.join();
  for (int* fd : {&listen_fd_, &wake_pipe_[0], &wake_pipe_[1]}) {
    if (*fd >= 0) ::close(*fd);
    *fd = -1;
  }
}

void BuiltinServer::Loop() {
  std::map<int, Connection> connections;
  std::uint64_t next_id = 0;
  std::vector<pollfd> fds;

  auto log = [this](const std::string& line) {
    if (log_) log_(line);
  };
  auto close_connection = [&](std::map<int, Connection>::iterator it) {
    log("connection " + std::to_string(it->second.id) + " closed");
    ::close(it->first);
    return connections.erase(it);
  };

  while (!stopping_) {
    fds.clear();
    fds.push_back(pollfd{wake_pipe_[0], POLLIN, 0});
    fds.push_back(pollfd{listen_fd_, POLLIN, 0});
    for (const auto& [fd, conn] : connections) {
      fds.push_back(pollfd{fd, static_cast<short>(POLLIN | (conn.out.empty() ? 0 : POLLOUT)), 0});
    }
    if (::poll(fds.data(), fds.size(), -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (fds[0].revents != 0) break;

    if (fds[1].revents & POLLIN) {
      while (true) {
        const int fd = ::accept4(listen_fd_, nullptr, nullptr, SOCK_NONBLOCK | SOCK_CLOEXEC);
        if (fd < 0) break;
        int one = 1;
        ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
        Connection conn;
        conn.id = next_id++;
        conn.state = machine_.initial_state();
        conn.out = "220 ready\r\n";
        log("connection " + std::to_string(conn.id) + " opened");
        connections.emplace(fd, std::move(conn));
      }
    }

    for (std::size_t i = 2; i < fds.size(); ++i) {
      auto it = connections.find(fds[i].fd);
      if (it == connections.end() || fds[i].revents == 0) continue;
      Connection& conn = it->second;
      bool closed = false;

      if (fds[i].revents & (POLLIN | POLLHUP | POLLERR)) {
        char chunk[1024];
        const ssize_t n = ::recv(it->first, chunk, sizeof(chunk), 0);
        if (n <= 0 && !(n < 0 && (errno == EAGAIN || errno == EINTR))) {
          closed = true;
        } else if (n > 0) {
          conn.in.append(chunk, static_cast<std::size_t>(n));
          std::size_t eol;
          while ((eol = conn.in.find('\n')) != std::string::npos) {
            std::string line = conn.in.substr(0, eol);
            conn.in.erase(0, eol + 1);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const std::size_t input = *machine_.inputs().IndexOf(RequestInput(line));
            const automata::Transition& t = machine_.transition(conn.state, input);
            conn.state = t.target;
            conn.out += ResponseLine(machine_.outputs()[t.output]) + "\r\n";
          }
        }
      }
      if (!closed && !conn.out.empty()) {
        const ssize_t n = ::send(it->first, conn.out.data(), conn.out.size(), MSG_NOSIGNAL);
        if (n > 0) {
          conn.out.erase(0, static_cast<std::size_t>(n));
        } else if (n < 0 && errno != EAGAIN && errno != EINTR) {
          closed = true;
        }
      }
      if (closed) close_connection(it);
    }
  }

  for (auto it = connections.begin(); it != connections.end();) it = close_connection(it);
}

}  // namespace statefuzz::sut
