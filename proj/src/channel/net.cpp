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

#include "sealed/channel/net.hpp"

#include <arpa/inet.h>
#include <cerrno>
#include <cstring>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <stdexcept>
#include <sys/socket.h>
#include <unistd.h>

#include "sealed/error.hpp"

namespace sealed::net {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw TransportError(what + ": " + std::strerror(errno));
}

void send_all(int fd, const std::uint8_t* p, std::size_t n) {
  while (n > 0) {
    ssize_t k = ::send(fd, p, n, MSG_NOSIGNAL);
    if (k < 0) {
      if (errno == EINTR) continue;
      fail("send");
    }
    p += k;
    n -= static_cast<std::size_t>(k);
  }
}

void recv_all(int fd, std::uint8_t* p, std::size_t n) {
  while (n > 0) {
    ssize_t k = ::recv(fd, p, n, 0);
    if (k == 0) throw TransportError("connection closed by peer");
    if (k < 0) {
      if (errno == EINTR) continue;
      if (errno == EAGAIN || errno == EWOULDBLOCK) throw TransportError("receive timed out");
      fail("recv");
    }
    p += k;
    n -= static_cast<std::size_t>(k);
  }
}

void set_nodelay(int fd) {
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
}

sockaddr_in resolve(const Endpoint& ep) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(ep.port);
  if (::inet_pton(AF_INET, ep.host.c_str(), &addr.sin_addr) == 1) return addr;
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (::getaddrinfo(ep.host.c_str(), nullptr, &hints, &res) != 0 || res == nullptr)
    throw TransportError("cannot resolve host " + ep.host);
  addr.sin_addr = reinterpret_cast<sockaddr_in*>(res->ai_addr)->sin_addr;
  ::freeaddrinfo(res);
  return addr;
}

}  // namespace

Endpoint Endpoint::parse(const std::string& text) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw std::invalid_argument("expected host:port, got '" + text + "'");
  Endpoint ep;
  ep.host = text.substr(0, colon);
  std::size_t used = 0;
  unsigned long port = 0;
  try {
    port = std::stoul(text.substr(colon + 1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad port in '" + text + "'");
  }
  if (used != text.size() - colon - 1 || port > 65535) throw std::invalid_argument("bad port in '" + text + "'");
  ep.port = static_cast<std::uint16_t>(port);
  return ep;
}

Socket::~Socket() { close(); }

Socket& Socket::operator=(Socket&& o) noexcept {
  if (this != &o) {
    close();
    fd_ = o.fd_;
    o.fd_ = -1;
  }
  return *this;
}

void Socket::close() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

void Socket::shutdown() {
  if (fd_ >= 0) ::shutdown(fd_, SHUT_RDWR);
}

void Socket::set_timeout(std::chrono::milliseconds t) {
  timeval tv{};
  tv.tv_sec = static_cast<time_t>(t.count() / 1000);
  tv.tv_usec = static_cast<suseconds_t>((t.count() % 1000) * 1000);
  ::setsockopt(fd_, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
  ::setsockopt(fd_, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
}

void Socket::write_frame(ByteView payload) {
  if (fd_ < 0) throw TransportError("socket closed");
  if (payload.size() > kMaxFrameSize) throw TransportError("frame too large");
  Bytes buf;
  buf.reserve(4 + payload.size());
  ByteWriter(buf).u32(static_cast<std::uint32_t>(payload.size())).raw(payload);
  send_all(fd_, buf.data(), buf.size());
}

Bytes Socket::read_frame() {
  if (fd_ < 0) throw TransportError("socket closed");
  std::uint8_t hdr[4];
  recv_all(fd_, hdr, 4);
  std::uint32_t n = (std::uint32_t{hdr[0]} << 24) | (std::uint32_t{hdr[1]} << 16) |
                    (std::uint32_t{hdr[2]} << 8) | hdr[3];
  if (n > kMaxFrameSize) throw TransportError("frame too large");
  Bytes out(n);
  recv_all(fd_, out.data(), n);
  return out;
}

Socket connect_tcp(const Endpoint& ep, std::chrono::milliseconds timeout) {
  sockaddr_in addr = resolve(ep);
  Socket s(::socket(AF_INET, SOCK_STREAM | SOCK_CLOEXEC, 0));
  if (!s.valid()) fail("socket");
  s.set_timeout(timeout);
  if (::connect(s.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0)
    fail("connect to " + ep.str());
  set_nodelay(s.fd());
  return s;
}

Listener::Listener(const Endpoint& ep) : host_(ep.host) {
  sockaddr_in addr = resolve(ep);
  sock_ = Socket(::socket(AF_INET, SOCK_STREAM | SOCK_CLOEXEC, 0));
  if (!sock_.valid()) fail("socket");
  int one = 1;
  ::setsockopt(sock_.fd(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  if (::bind(sock_.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) fail("bind " + ep.str());
  if (::listen(sock_.fd(), 16) != 0) fail("listen");
  socklen_t len = sizeof addr;
  ::getsockname(sock_.fd(), reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

std::optional<Socket> Listener::accept(std::chrono::milliseconds timeout) {
  pollfd p{sock_.fd(), POLLIN, 0};
  int r = ::poll(&p, 1, static_cast<int>(timeout.count()));
  if (r < 0) {
    if (errno == EINTR) return std::nullopt;
    fail("poll");
  }
  if (r == 0) return std::nullopt;
  int fd = ::accept4(sock_.fd(), nullptr, nullptr, SOCK_CLOEXEC);
  if (fd < 0) {
    if (errno == EINTR || errno == EAGAIN || errno == ECONNABORTED) return std::nullopt;
    fail("accept");
  }
  set_nodelay(fd);
  return Socket(fd);
}

}  // namespace sealed::net
