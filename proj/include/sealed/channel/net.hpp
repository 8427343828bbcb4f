/*
 * Copyright 2026 The Sealed Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEALED_CHANNEL_NET_HPP
#define SEALED_CHANNEL_NET_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "sealed/bytes.hpp"

namespace sealed::net {

inline constexpr std::size_t kMaxFrameSize = 1 << 20;

struct Endpoint {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;

  // "host:port"; throws std::invalid_argument.
  static Endpoint parse(const std::string& text);
  std::string str() const { return host + ":" + std::to_string(port); }
};

// Owning TCP socket.
class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  ~Socket();
  Socket(Socket&& o) noexcept : fd_(o.fd_) { o.fd_ = -1; }
  Socket& operator=(Socket&& o) noexcept;
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;

  int fd() const { return fd_; }
  bool valid() const { return fd_ >= 0; }
  void close();
  // Unblocks any thread waiting on this socket.
  void shutdown();
  void set_timeout(std::chrono::milliseconds t);

  // Frames are a u32 big-endian length and the payload. Both throw
  // TransportError on I/O failure, timeouts, EOF or oversized frames.
  void write_frame(ByteView payload);
  Bytes read_frame();

 private:
  int fd_ = -1;
};

// Throws TransportError.
Socket connect_tcp(const Endpoint& ep, std::chrono::milliseconds timeout = std::chrono::seconds(5));

class Listener {
 public:
  // Port 0 picks an ephemeral port. Throws TransportError.
  explicit Listener(const Endpoint& ep);

  std::uint16_t port() const { return port_; }
  Endpoint endpoint() const { return {host_, port_}; }
  // Waits up to `timeout`; empty when nothing arrived.
  std::optional<Socket> accept(std::chrono::milliseconds timeout);

 private:
  Socket sock_;
  std::string host_;
  std::uint16_t port_ = 0;
};

}  // namespace sealed::net

#endif  // SEALED_CHANNEL_NET_HPP
