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

#ifndef SEALED_CHANNEL_TRANSPORT_HPP
#define SEALED_CHANNEL_TRANSPORT_HPP

#include <chrono>
#include <memory>
#include <optional>

#include "sealed/channel/handshake.hpp"
#include "sealed/channel/net.hpp"
#include "sealed/core/app.hpp"

namespace sealed::channel {

struct ChannelOptions {
  net::Endpoint endpoint;
  bool attestation = true;
  // Used only with attestation on.
  ClientHandshake::Config handshake;
  // New connection and handshake for every call.
  bool per_call_handshake = false;
  std::chrono::milliseconds io_timeout{5000};
};

// Attests the enclave, then carries calls in sealed records.
class AttestedTransport : public core::CallTransport {
 public:
  explicit AttestedTransport(ChannelOptions options) : options_(std::move(options)) {}

  Bytes roundtrip(ByteView call_message) override;
  // Connects and completes the handshake now. Throws AttestationFailure,
  // AuthFailure or TransportError.
  void connect();
  bool connected() const { return session_.has_value(); }

 private:
  ChannelOptions options_;
  net::Socket sock_;
  std::optional<Session> session_;
};

// Plain CALL/RESULT frames; the attestation-off baseline.
class PlainTransport : public core::CallTransport {
 public:
  explicit PlainTransport(ChannelOptions options) : options_(std::move(options)) {}
  Bytes roundtrip(ByteView call_message) override;

 private:
  ChannelOptions options_;
  net::Socket sock_;
};

core::TransportFactory make_transport_factory(ChannelOptions options);

}  // namespace sealed::channel

#endif  // SEALED_CHANNEL_TRANSPORT_HPP
