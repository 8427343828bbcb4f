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

#include "sealed/channel/monitor.hpp"

#include <stdexcept>

#include "sealed/channel/handshake.hpp"
#include "sealed/core/message.hpp"
#include "sealed/error.hpp"

namespace sealed::channel {

Monitor::Monitor(const core::DispatchTable& table, const Attestor* attestor,
                 const CredentialRegistry& credentials, MonitorOptions options)
    : table_(&table), attestor_(attestor), credentials_(&credentials), options_(options) {
  if (options_.attestation && attestor_ == nullptr)
    throw std::invalid_argument("attested monitor needs an attestor");
}

void Monitor::serve(net::Listener& listener, std::stop_token stop) {
  while (!stop.stop_requested()) {
    std::optional<net::Socket> s;
    try {
      s = listener.accept(options_.poll_interval);
    } catch (const TransportError& e) {
      note(e.what());
      continue;
    }
    if (!s) continue;
    net::Socket sock = std::move(*s);
    std::stop_callback wake(stop, [&sock] { sock.shutdown(); });
    handle(sock);
  }
}

void Monitor::serve_connection(net::Socket sock) { handle(sock); }

void Monitor::handle(net::Socket& sock) {
  ++c_.connections;
  sock.set_timeout(options_.io_timeout);
  try {
    if (options_.attestation) {
      serve_attested(sock);
    } else {
      serve_plain(sock);
    }
  } catch (const AuthFailure& e) {
    ++c_.auth_failures;
    note(e.what());
    try {
      sock.write_frame(core::encode_result_err(ErrorCode::kAuthFailure, "authentication failure"));
    } catch (const TransportError&) {
    }
  } catch (const DecodeError& e) {
    // Only the handshake can get here; dispatch reports its own decode errors.
    ++c_.handshake_errors;
    note(e.what());
    try {
      sock.write_frame(core::encode_result_err(ErrorCode::kDecodeError, "malformed handshake"));
    } catch (const TransportError&) {
    }
  } catch (const SessionError& e) {
    ++c_.session_errors;
    note(e.what());
  } catch (const TransportError&) {
    // Peer went away; the normal end of a connection.
    ++c_.transport_errors;
  } catch (const std::exception& e) {
    ++c_.transport_errors;
    note(e.what());
  }
}

void Monitor::serve_attested(net::Socket& sock) {
  ServerHandshake hs(*attestor_, *credentials_, options_.client_auth);
  Bytes hello = sock.read_frame();
  sock.write_frame(hs.on_hello(hello));
  hs.on_finish(sock.read_frame());
  Session session = hs.session();
  ++c_.sessions;
  for (;;) {
    Bytes record = sock.read_frame();
    Bytes call = session.open(record);
    sock.write_frame(session.seal(run_call(call)));
  }
}

void Monitor::serve_plain(net::Socket& sock) {
  for (;;) {
    Bytes call = sock.read_frame();
    sock.write_frame(run_call(call));
  }
}

Bytes Monitor::run_call(ByteView call) {
  ++c_.calls;
  core::DispatchOutcome out = table_->handle(call);
  switch (out.rejection) {
    case core::Rejection::kNone: ++c_.ok; break;
    case core::Rejection::kIfcGuard: ++c_.guard; break;
    case core::Rejection::kOutputGate: ++c_.gate; break;
    default: ++c_.other; break;
  }
  return std::move(out.response);
}

MonitorStats Monitor::stats() const {
  MonitorStats s;
  s.connections = c_.connections;
  s.sessions = c_.sessions;
  s.auth_failures = c_.auth_failures;
  s.session_errors = c_.session_errors;
  s.handshake_errors = c_.handshake_errors;
  s.transport_errors = c_.transport_errors;
  s.calls = c_.calls;
  s.ok = c_.ok;
  s.guard_rejections = c_.guard;
  s.gate_rejections = c_.gate;
  s.other_rejections = c_.other;
  return s;
}

void Monitor::note(const std::string& msg) const {
  if (log_) log_(msg);
}

}  // namespace sealed::channel
