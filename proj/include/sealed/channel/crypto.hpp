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

#ifndef SEALED_CHANNEL_CRYPTO_HPP
#define SEALED_CHANNEL_CRYPTO_HPP

// Thin value-typed wrappers over libsodium for the fixed algorithm profile:
// Ed25519 signatures, X25519 key agreement, ChaCha20-Poly1305 (IETF) AEAD,
// SHA-256, HMAC-SHA256 and HKDF-SHA256.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "sealed/bytes.hpp"

namespace sealed::crypto {

using Digest = std::array<std::uint8_t, 32>;
using SignPublicKey = std::array<std::uint8_t, 32>;
using SignSecretKey = std::array<std::uint8_t, 64>;
using Signature = std::array<std::uint8_t, 64>;
using KxPublicKey = std::array<std::uint8_t, 32>;
using KxSecretKey = std::array<std::uint8_t, 32>;
using AeadKey = std::array<std::uint8_t, 32>;
using AeadNonce = std::array<std::uint8_t, 12>;

inline constexpr std::size_t kAeadTagSize = 16;

struct SigningKeyPair {
  SignPublicKey public_key{};
  SignSecretKey secret_key{};

  static SigningKeyPair generate();
};

struct KxKeyPair {
  KxPublicKey public_key{};
  KxSecretKey secret_key{};

  static KxKeyPair generate();
};

Digest sha256(ByteView data);
Digest hmac_sha256(ByteView key, ByteView data);
// RFC 5869 extract-then-expand. Throws std::invalid_argument if length > 255*32.
Bytes hkdf_sha256(ByteView salt, ByteView ikm, std::string_view info, std::size_t length);
AeadKey hkdf_key(ByteView salt, ByteView ikm, std::string_view info);

Signature sign(const SignSecretKey& sk, ByteView message);
bool verify(const SignPublicKey& pk, ByteView message, const Signature& sig);

// Throws std::runtime_error when the peer key yields the all-zero secret.
Digest x25519(const KxSecretKey& sk, const KxPublicKey& peer);

// Converts an Ed25519 key pair to the matching X25519 pair, so one identity
// key can sign and receive encrypted results.
KxKeyPair kx_from_signing(const SigningKeyPair& signing);
KxPublicKey kx_public_from_signing(const SignPublicKey& pk);

Bytes aead_seal(const AeadKey& key, const AeadNonce& nonce, ByteView ad, ByteView plaintext);
std::optional<Bytes> aead_open(const AeadKey& key, const AeadNonce& nonce, ByteView ad, ByteView ciphertext);

void random_bytes(std::span<std::uint8_t> out);

template <std::size_t N>
std::array<std::uint8_t, N> random_array() {
  std::array<std::uint8_t, N> a;
  random_bytes(a);
  return a;
}

bool constant_time_equal(ByteView a, ByteView b);

template <std::size_t N>
ByteView view(const std::array<std::uint8_t, N>& a) {
  return {a.data(), a.size()};
}

}  // namespace sealed::crypto

#endif  // SEALED_CHANNEL_CRYPTO_HPP
