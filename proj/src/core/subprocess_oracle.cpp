// Copyright 2026 The dpk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <string>

#include "dpk/attack.hpp"
#include "dpk/error.hpp"
#include "dpk/hex.hpp"

namespace dpk {
namespace {

[[noreturn]] void transport_error(const std::string& what) {
  throw Error(ErrorCode::OracleTransport, what);
}

class Fd {
 public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  ~Fd() { reset(); }
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;

  int get() const { return fd_; }
  void reset() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_;
};

std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string::npos) return {};
  return s.substr(begin, s.find_last_not_of(ws) - begin + 1);
}

}  // namespace

Signature SubprocessOracle::query(const CompressedPoint& pk) {
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) transport_error("pipe failed");
  Fd child_stdin(in_pipe[0]), to_child(in_pipe[1]);
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) transport_error("pipe failed");
  Fd from_child(out_pipe[0]), child_stdout(out_pipe[1]);

  const pid_t pid = ::fork();
  if (pid < 0) transport_error("fork failed");
  if (pid == 0) {
    ::dup2(child_stdin.get(), STDIN_FILENO);
    ::dup2(child_stdout.get(), STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  child_stdin.reset();
  child_stdout.reset();

  // The child may exit without reading stdin; don't die on SIGPIPE.
  struct sigaction ignore {}, previous {};
  ignore.sa_handler = SIG_IGN;
  ::sigaction(SIGPIPE, &ignore, &previous);
  const std::string request = to_hex(pk.bytes) + "\n";
  std::size_t written = 0;
  while (written < request.size()) {
    const ssize_t n = ::write(to_child.get(), request.data() + written, request.size() - written);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    written += static_cast<std::size_t>(n);
  }
  ::sigaction(SIGPIPE, &previous, nullptr);
  to_child.reset();

  std::string response;
  char buf[256];
  for (;;) {
    const ssize_t n = ::read(from_child.get(), buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    response.append(buf, static_cast<std::size_t>(n));
  }

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    transport_error("oracle command failed with status " + std::to_string(WEXITSTATUS(status)));
  }

  response = trim(response);
  if (response.size() != 128) {
    transport_error("oracle must print 128 hex characters, got " +
                    std::to_string(response.size()));
  }
  try {
    const auto bytes = from_hex(response);
    return Signature::from_bytes(std::span<const std::uint8_t, 64>(bytes.data(), 64));
  } catch (const Error& e) {
    transport_error(std::string("oracle response: ") + e.what());
  }
}

}  // namespace dpk
