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

#include "sealed/channel/transport.hpp"

#include "sealed/error.hpp"

namespace sealed::channel {

void AttestedTransport::connect() {
  session_.reset();
  sock_ = net::connect_tcp(options_.endpoint, options_.io_timeout);
  ClientHandshake hs(options_.handshake);
  sock_.write_frame(hs.hello());
  Bytes finish = hs.on_attest(sock_.read_frame());
  sock_.write_frame(finish);
  session_ = hs.session();
}

Bytes AttestedTransport::roundtrip(ByteView call_message) {
  if (options_.per_call_handshake || !session_) connect();
  try {
    sock_.write_frame(session_->seal(call_message));
    Bytes reply = session_->open(sock_.read_frame());
    if (options_.per_call_handshake) {
      sock_.close();
      session_.reset();
    }
    return reply;
  } catch (...) {
    sock_.close();
    session_.reset();
    throw;
  }
}

Bytes PlainTransport::roundtrip(ByteView call_message) {
  if (options_.per_call_handshake || !sock_.valid()) sock_ = net::connect_tcp(options_.endpoint, options_.io_timeout);
  try {
    sock_.write_frame(call_message);
    Bytes reply = sock_.read_frame();
    if (options_.per_call_handshake) sock_.close();
    return reply;
  } catch (...) {
    sock_.close();
    throw;
  }
}

core::TransportFactory make_transport_factory(ChannelOptions options) {
  return [options]() -> std::unique_ptr<core::CallTransport> {
    if (options.attestation) return std::make_unique<AttestedTransport>(options);
    return std::make_unique<PlainTransport>(options);
  };
}

}  // namespace sealed::channel
