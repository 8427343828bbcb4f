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

#include "sealed/channel/handshake.hpp"

#include <algorithm>

#include "sealed/core/message.hpp"
#include "sealed/core/value.hpp"
#include "sealed/error.hpp"

namespace sealed::channel {

namespace {

template <std::size_t N>
void read_into(ByteReader& in, std::array<std::uint8_t, N>& out) {
  ByteView b = in.raw(N);
  std::copy(b.begin(), b.end(), out.begin());
}

crypto::Digest transcript_hash(ByteView hello, ByteView attest) {
  Bytes t;
  t.reserve(hello.size() + attest.size());
  t.insert(t.end(), hello.begin(), hello.end());
  t.insert(t.end(), attest.begin(), attest.end());
  return crypto::sha256(t);
}

}  // namespace

Bytes encode_hello(const ClientHello& h) {
  Bytes out;
  ByteWriter w(out);
  w.u8(kClientHello).raw(crypto::view(h.nonce));
  core::encode_value(core::Value::string(h.name), w);
  w.raw(crypto::view(h.ephemeral)).raw(crypto::view(h.signature));
  return out;
}

ClientHello decode_hello(ByteView b) {
  ByteReader in(b);
  if (in.u8() != kClientHello) throw DecodeError("expected CLIENT_HELLO");
  ClientHello h;
  read_into(in, h.nonce);
  core::Value name = core::decode_value(in);
  if (name.tag() != core::Tag::kString) throw DecodeError("client name must be a string");
  h.name = name.as_string();
  read_into(in, h.ephemeral);
  read_into(in, h.signature);
  in.expect_end();
  return h;
}

Bytes encode_attest(const ServerAttest& a) {
  Bytes out;
  ByteWriter w(out);
  w.u8(kServerAttest)
      .raw(crypto::view(a.ephemeral))
      .raw(crypto::view(a.measurement))
      .raw(crypto::view(a.report_data))
      .raw(crypto::view(a.quote));
  return out;
}

ServerAttest decode_attest(ByteView b) {
  ByteReader in(b);
  if (in.u8() != kServerAttest) throw DecodeError("expected SERVER_ATTEST");
  ServerAttest a;
  read_into(in, a.ephemeral);
  read_into(in, a.measurement);
  read_into(in, a.report_data);
  read_into(in, a.quote);
  in.expect_end();
  return a;
}

Bytes hello_signed_part(const ClientHello& h) {
  Bytes out;
  ByteWriter w(out);
  w.raw(crypto::view(h.nonce)).raw(crypto::view(h.ephemeral)).raw(h.name);
  return out;
}

crypto::Digest report_data_for(const crypto::KxPublicKey& enclave_ephemeral,
                               const std::array<std::uint8_t, kNonceSize>& nonce) {
  Bytes buf;
  ByteWriter w(buf);
  w.raw(crypto::view(enclave_ephemeral)).raw(crypto::view(nonce));
  return crypto::sha256(buf);
}

SessionKeys derive_session_keys(const crypto::Digest& shared, const crypto::Digest& transcript) {
  SessionKeys k;
  k.client_to_server = crypto::hkdf_key(crypto::view(transcript), crypto::view(shared), "c2s");
  k.server_to_client = crypto::hkdf_key(crypto::view(transcript), crypto::view(shared), "s2c");
  k.finish = crypto::hkdf_key(crypto::view(transcript), crypto::view(shared), "finish");
  Bytes id = crypto::hkdf_sha256(crypto::view(transcript), crypto::view(shared), "session-id", k.id.size());
  std::copy(id.begin(), id.end(), k.id.begin());
  return k;
}

Bytes ClientHandshake::hello() {
  ephemeral_ = crypto::KxKeyPair::generate();
  hello_ = ClientHello{};
  hello_.nonce = crypto::random_array<kNonceSize>();
  hello_.name = config_.name;
  hello_.ephemeral = ephemeral_.public_key;
  if (config_.signing_key) hello_.signature = crypto::sign(*config_.signing_key, hello_signed_part(hello_));
  hello_bytes_ = encode_hello(hello_);
  keys_.reset();
  return hello_bytes_;
}

Bytes ClientHandshake::on_attest(ByteView reply) {
  if (hello_bytes_.empty()) throw DecodeError("handshake not started");
  if (!reply.empty() && reply[0] == static_cast<std::uint8_t>(core::MessageType::kResultErr)) {
    core::Response r = core::decode_response(reply);
    if (auto* err = std::get_if<core::ResultError>(&r)) {
      if (err->code == ErrorCode::kAuthFailure) throw AuthFailure(err->message);
      throw RemoteError(err->code, err->message);
    }
    throw DecodeError("unexpected response during handshake");
  }
  ServerAttest a = decode_attest(reply);

  Bytes quoted;
  ByteWriter w(quoted);
  w.raw(crypto::view(a.measurement)).raw(crypto::view(a.report_data));
  if (!crypto::verify(config_.quoting_authority, quoted, a.quote))
    throw AttestationFailure(AttestationFailure::Reason::kBadSignature);
  if (!crypto::constant_time_equal(crypto::view(a.measurement), crypto::view(config_.expected_measurement)))
    throw AttestationFailure(AttestationFailure::Reason::kMeasurementMismatch);
  crypto::Digest expected_rd = report_data_for(a.ephemeral, hello_.nonce);
  if (!crypto::constant_time_equal(crypto::view(a.report_data), crypto::view(expected_rd)))
    throw AttestationFailure(AttestationFailure::Reason::kStaleBinding);

  crypto::Digest shared;
  try {
    shared = crypto::x25519(ephemeral_.secret_key, a.ephemeral);
  } catch (const std::runtime_error&) {
    throw AttestationFailure(AttestationFailure::Reason::kStaleBinding);
  }
  crypto::Digest th = transcript_hash(hello_bytes_, reply);
  keys_ = derive_session_keys(shared, th);

  Bytes finish;
  ByteWriter f(finish);
  f.u8(kClientFinish).raw(crypto::view(crypto::hmac_sha256(crypto::view(keys_->finish), crypto::view(th))));
  return finish;
}

Session ClientHandshake::session() const {
  if (!keys_) throw SessionError("handshake incomplete");
  return Session(keys_->id, keys_->client_to_server, keys_->server_to_client);
}

Bytes ServerHandshake::on_hello(ByteView frame) {
  ClientHello h = decode_hello(frame);
  if (verify_client_) {
    const crypto::SignPublicKey* pk = credentials_->find(h.name);
    if (pk == nullptr || !crypto::verify(*pk, hello_signed_part(h), h.signature))
      throw AuthFailure("client authentication failed");
  }
  client_name_ = h.name;

  crypto::KxKeyPair eph = crypto::KxKeyPair::generate();
  crypto::Digest shared;
  try {
    shared = crypto::x25519(eph.secret_key, h.ephemeral);
  } catch (const std::runtime_error&) {
    throw AuthFailure("degenerate client key share");
  }
  ServerAttest a;
  a.ephemeral = eph.public_key;
  a.measurement = attestor_->measurement();
  a.report_data = report_data_for(a.ephemeral, h.nonce);
  a.quote = attestor_->quote(a.report_data);
  Bytes reply = encode_attest(a);

  transcript_ = transcript_hash(frame, reply);
  keys_ = derive_session_keys(shared, transcript_);
  return reply;
}

void ServerHandshake::on_finish(ByteView frame) {
  if (!keys_) throw AuthFailure("finish before hello");
  crypto::Digest mac = crypto::hmac_sha256(crypto::view(keys_->finish), crypto::view(transcript_));
  if (frame.size() != 1 + mac.size() || frame[0] != kClientFinish ||
      !crypto::constant_time_equal(frame.subspan(1), crypto::view(mac)))
    throw AuthFailure("handshake finish mismatch");
  finished_ = true;
}

Session ServerHandshake::session() const {
  if (!keys_ || !finished_) throw SessionError("handshake incomplete");
  return Session(keys_->id, keys_->server_to_client, keys_->client_to_server);
}

}  // namespace sealed::channel
