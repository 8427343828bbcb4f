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

#ifndef SEALED_CHANNEL_HANDSHAKE_HPP
#define SEALED_CHANNEL_HANDSHAKE_HPP

#include <optional>
#include <string>

#include "sealed/bytes.hpp"
#include "sealed/channel/attestation.hpp"
#include "sealed/channel/crypto.hpp"
#include "sealed/channel/session.hpp"

namespace sealed::channel {

inline constexpr std::uint8_t kClientHello = 0x10;
inline constexpr std::uint8_t kServerAttest = 0x11;
inline constexpr std::uint8_t kClientFinish = 0x12;

inline constexpr std::size_t kNonceSize = 32;

struct ClientHello {
  std::array<std::uint8_t, kNonceSize> nonce{};
  std::string name;
  crypto::KxPublicKey ephemeral{};
  crypto::Signature signature{};
};

struct ServerAttest {
  crypto::KxPublicKey ephemeral{};
  Measurement measurement{};
  crypto::Digest report_data{};
  crypto::Signature quote{};
};

Bytes encode_hello(const ClientHello& h);
ClientHello decode_hello(ByteView b);
Bytes encode_attest(const ServerAttest& a);
ServerAttest decode_attest(ByteView b);

// Bytes the client signs: nonce ‖ ephemeral ‖ name.
Bytes hello_signed_part(const ClientHello& h);
crypto::Digest report_data_for(const crypto::KxPublicKey& enclave_ephemeral,
                               const std::array<std::uint8_t, kNonceSize>& nonce);

// Keys shared by both sides once the exchange is complete.
struct SessionKeys {
  crypto::AeadKey client_to_server{};
  crypto::AeadKey server_to_client{};
  crypto::AeadKey finish{};
  SessionId id{};
};

SessionKeys derive_session_keys(const crypto::Digest& shared, const crypto::Digest& transcript);

// Client half. Usage: hello(), then on_attest(reply) which returns the
// CLIENT_FINISH frame, then session().
class ClientHandshake {
 public:
  struct Config {
    std::string name;
    // Absent: send an all-zero signature (client authentication off).
    std::optional<crypto::SignSecretKey> signing_key;
    Measurement expected_measurement{};
    crypto::SignPublicKey quoting_authority{};
  };

  explicit ClientHandshake(Config config) : config_(std::move(config)) {}

  Bytes hello();
  // Throws AttestationFailure for a bad quote, AuthFailure or RemoteError
  // when the enclave answered with an error, DecodeError for junk.
  Bytes on_attest(ByteView reply);
  Session session() const;

 private:
  Config config_;
  crypto::KxKeyPair ephemeral_{};
  Bytes hello_bytes_;
  ClientHello hello_{};
  std::optional<SessionKeys> keys_;
};

// Enclave half. Usage: on_hello(frame) returns SERVER_ATTEST, then
// on_finish(frame), then session().
class ServerHandshake {
 public:
  ServerHandshake(const Attestor& attestor, const CredentialRegistry& credentials, bool verify_client)
      : attestor_(&attestor), credentials_(&credentials), verify_client_(verify_client) {}

  // Throws DecodeError for a malformed hello, AuthFailure for an unknown
  // client or bad signature.
  Bytes on_hello(ByteView frame);
  // Throws AuthFailure when the finish MAC does not match this transcript.
  void on_finish(ByteView frame);
  Session session() const;

  const std::string& client_name() const { return client_name_; }

 private:
  const Attestor* attestor_;
  const CredentialRegistry* credentials_;
  bool verify_client_;
  std::string client_name_;
  std::optional<SessionKeys> keys_;
  crypto::Digest transcript_{};
  bool finished_ = false;
};

}  // namespace sealed::channel

#endif  // SEALED_CHANNEL_HANDSHAKE_HPP
