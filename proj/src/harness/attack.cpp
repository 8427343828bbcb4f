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

#include "sealed/harness/attack.hpp"

#include <sstream>
#include <thread>

#include "sealed/apps/password.hpp"
#include "sealed/channel/handshake.hpp"
#include "sealed/channel/transport.hpp"
#include "sealed/error.hpp"
#include "sealed/harness/mitm.hpp"
#include "sealed/runtime/host.hpp"

namespace sealed::harness {

namespace {

using channel::MonitorStats;

struct Target {
  crypto::SigningKeyPair alice = crypto::SigningKeyPair::generate();
  std::unique_ptr<runtime::EnclaveHost> host;
  std::optional<apps::PasswordApi> api;

  explicit Target(const AttackOptions& opts) {
    runtime::EnclaveSetup setup;
    setup.authority = crypto::SigningKeyPair::generate();
    setup.credentials.add("Alice", alice.public_key);
    setup.security.client_auth = opts.client_auth;
    authority = setup.authority.public_key;
    host = std::make_unique<runtime::EnclaveHost>(std::move(setup), [this](core::App& app) {
      apps::PasswordOptions po;
      po.with_leak = true;
      api = apps::register_password_checker(app, po);
    });
    host->start();
  }

  channel::ChannelOptions alice_via(const net::Endpoint& ep) const {
    channel::ChannelOptions o;
    o.endpoint = ep;
    o.handshake = {"Alice", alice.secret_key, host->measurement(), authority};
    return o;
  }

  MonitorStats stats() const { return host->monitor().stats(); }

  crypto::SignPublicKey authority{};
};

Bytes call_bytes(const core::Secure<bool()>& s) { return core::encode_call({s.ref().call_id(), s.ref().args()}); }

// Waits for the monitor to finish with connections the attack left behind.
void settle() { std::this_thread::sleep_for(std::chrono::milliseconds(30)); }

AttackOutcome tampered_record(Target& t) {
  AttackOutcome out{"a", "in-flight record tampering", false, ""};
  auto call = call_bytes(t.api->checkpwd.apply("password"));

  auto flip_first_record = [](Direction want) {
    return [want](Direction d, std::size_t, Bytes& f) {
      if (d == want && !f.empty() && f[0] == channel::kRecordType) f.back() ^= 0x01;
    };
  };

  MonitorStats before = t.stats();
  bool up_rejected = false;
  {
    Mitm mitm(t.host->endpoint(), flip_first_record(Direction::kToEnclave));
    channel::AttestedTransport tr(t.alice_via(mitm.endpoint()));
    try {
      tr.roundtrip(call);
    } catch (const TransportError&) {
      up_rejected = true;
    } catch (const SessionError&) {
      up_rejected = true;
    }
    settle();
  }
  MonitorStats after = t.stats();
  up_rejected = up_rejected && after.calls == before.calls && after.session_errors > before.session_errors;

  bool down_rejected = false;
  {
    Mitm mitm(t.host->endpoint(), flip_first_record(Direction::kToClient));
    channel::AttestedTransport tr(t.alice_via(mitm.endpoint()));
    try {
      tr.roundtrip(call);
    } catch (const SessionError&) {
      down_rejected = true;
    }
    settle();
  }

  out.blocked = up_rejected && down_rejected;
  out.detail = std::string("client->enclave record ") + (up_rejected ? "rejected before dispatch" : "ACCEPTED") +
               ", enclave->client record " + (down_rejected ? "rejected by client" : "ACCEPTED");
  return out;
}

AttackOutcome unknown_client(Target& t) {
  AttackOutcome out{"b", "unknown client", false, ""};
  auto mallory = crypto::SigningKeyPair::generate();
  auto opts = t.alice_via(t.host->endpoint());
  opts.handshake.name = "Mallory";
  opts.handshake.signing_key = mallory.secret_key;
  MonitorStats before = t.stats();
  channel::AttestedTransport tr(opts);
  try {
    Bytes reply = tr.roundtrip(call_bytes(t.api->checkpwd.apply("password")));
    out.detail = "call from Mallory was dispatched";
  } catch (const AuthFailure&) {
    settle();
    out.blocked = t.stats().calls == before.calls;
    out.detail = out.blocked ? "AUTH_FAILURE before any dispatch" : "rejected but a call was dispatched";
  } catch (const std::exception& e) {
    out.detail = std::string("unexpected error: ") + e.what();
  }
  return out;
}

AttackOutcome leaky_function(Target& t) {
  AttackOutcome out{"c", "leaky enclave function", false, ""};
  MonitorStats before = t.stats();
  channel::AttestedTransport tr(t.alice_via(t.host->endpoint()));
  Bytes right = tr.roundtrip(call_bytes(t.api->leakpwd->apply("password")));
  Bytes wrong = tr.roundtrip(call_bytes(t.api->leakpwd->apply("hunter2")));
  MonitorStats after = t.stats();

  auto r = core::decode_response(right);
  const auto* err = std::get_if<core::ResultError>(&r);
  bool fixed = err && err->code == ErrorCode::kIfcViolation && err->message == kIfcViolationMessage;
  bool at_gate = after.gate_rejections - before.gate_rejections == 2 && after.ok == before.ok;
  bool opaque = right == wrong;
  out.blocked = fixed && at_gate && opaque;
  std::ostringstream d;
  d << (err ? "RESULT_ERR(" + std::string(error_code_name(err->code)) + ", \"" + err->message + "\")" : "RESULT_OK")
    << (at_gate ? ", stopped at the output gate" : ", NOT stopped at the output gate")
    << (opaque ? ", identical for right and wrong guesses" : ", responses differ with the secret");
  out.detail = d.str();
  return out;
}

AttackOutcome replayed_handshake(Target& t) {
  AttackOutcome out{"d", "replayed handshake", false, ""};

  // Record one honest session.
  std::vector<RecordedFrame> tape;
  {
    Mitm mitm(t.host->endpoint());
    channel::AttestedTransport tr(t.alice_via(mitm.endpoint()));
    tr.roundtrip(call_bytes(t.api->checkpwd.apply("password")));
    settle();
    tape = mitm.transcript();
  }
  std::vector<Bytes> up, down;
  for (auto& f : tape) (f.direction == Direction::kToEnclave ? up : down).push_back(f.frame);
  if (up.size() < 3 || down.size() < 2) {
    out.detail = "recording incomplete";
    return out;
  }

  // Client side of the tape against the live enclave.
  MonitorStats before = t.stats();
  try {
    net::Socket s = net::connect_tcp(t.host->endpoint());
    s.write_frame(up[0]);
    s.read_frame();
    s.write_frame(up[1]);
    s.write_frame(up[2]);
    s.read_frame();
    s.read_frame();
  } catch (const TransportError&) {
  }
  settle();
  MonitorStats after = t.stats();
  bool enclave_rejects = after.calls == before.calls && after.auth_failures > before.auth_failures;

  // Enclave side of the tape against a fresh client.
  bool client_rejects = false;
  {
    net::Listener fake(net::Endpoint{"127.0.0.1", 0});
    Bytes attest = down[0];
    std::jthread server([&] {
      if (auto s = fake.accept(std::chrono::seconds(5))) {
        try {
          s->read_frame();
          s->write_frame(attest);
          s->read_frame();
        } catch (const TransportError&) {
        }
      }
    });
    channel::AttestedTransport tr(t.alice_via(fake.endpoint()));
    try {
      tr.connect();
    } catch (const AttestationFailure& e) {
      client_rejects = e.reason() == AttestationFailure::Reason::kStaleBinding;
    }
  }

  out.blocked = enclave_rejects && client_rejects;
  out.detail = std::string("replayed client transcript ") + (enclave_rejects ? "rejected by enclave" : "ACCEPTED") +
               ", replayed SERVER_ATTEST " + (client_rejects ? "rejected as stale" : "ACCEPTED");
  return out;
}

}  // namespace

std::vector<AttackOutcome> run_attack_suite(const AttackOptions& opts) {
  Target t(opts);
  std::vector<AttackOutcome> out;
  out.push_back(tampered_record(t));
  out.push_back(unknown_client(t));
  out.push_back(leaky_function(t));
  out.push_back(replayed_handshake(t));
  return out;
}

}  // namespace sealed::harness
