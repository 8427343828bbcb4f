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

#ifndef SEALED_CHANNEL_MONITOR_HPP
#define SEALED_CHANNEL_MONITOR_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stop_token>
#include <string>

#include "sealed/channel/attestation.hpp"
#include "sealed/channel/net.hpp"
#include "sealed/core/dispatch.hpp"

namespace sealed::channel {

struct MonitorOptions {
  // Off: CALL/RESULT frames travel in the clear and nobody is attested.
  bool attestation = true;
  // Off: client names and signatures in CLIENT_HELLO are not checked.
  bool client_auth = true;
  std::chrono::milliseconds io_timeout{5000};
  std::chrono::milliseconds poll_interval{50};
};

struct MonitorStats {
  std::uint64_t connections = 0;
  std::uint64_t sessions = 0;
  std::uint64_t auth_failures = 0;
  std::uint64_t session_errors = 0;
  std::uint64_t handshake_errors = 0;
  std::uint64_t transport_errors = 0;
  std::uint64_t calls = 0;
  std::uint64_t ok = 0;
  std::uint64_t guard_rejections = 0;
  std::uint64_t gate_rejections = 0;
  std::uint64_t other_rejections = 0;
};

// The enclave-side loop. Connections are served one at a time, so enclave
// state sees a single sequence of calls.
class Monitor {
 public:
  // `attestor` may be null only when attestation is off.
  Monitor(const core::DispatchTable& table, const Attestor* attestor, const CredentialRegistry& credentials,
          MonitorOptions options = {});

  // Accepts until stop is requested.
  void serve(net::Listener& listener, std::stop_token stop);
  // Serves one connection until the peer closes or misbehaves. Never throws.
  void serve_connection(net::Socket sock);

  MonitorStats stats() const;

  // Optional diagnostic sink for rejected connections.
  void set_log(std::function<void(const std::string&)> log) { log_ = std::move(log); }

 private:
  void handle(net::Socket& sock);
  void serve_attested(net::Socket& sock);
  void serve_plain(net::Socket& sock);
  Bytes run_call(ByteView call);
  void note(const std::string& msg) const;

  const core::DispatchTable* table_;
  const Attestor* attestor_;
  const CredentialRegistry* credentials_;
  MonitorOptions options_;
  std::function<void(const std::string&)> log_;

  struct Counters {
    std::atomic<std::uint64_t> connections{0}, sessions{0}, auth_failures{0}, session_errors{0}, handshake_errors{0},
        transport_errors{0}, calls{0}, ok{0}, guard{0}, gate{0}, other{0};
  } c_;
};

}  // namespace sealed::channel

#endif  // SEALED_CHANNEL_MONITOR_HPP
