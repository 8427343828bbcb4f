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

#include "sealed/channel/crypto.hpp"

#include <sodium.h>

#include <stdexcept>

namespace sealed::crypto {

namespace {

void ensure_sodium() {
  static const bool ready = [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
    return true;
  }();
  (void)ready;
}

}  // namespace

SigningKeyPair SigningKeyPair::generate() {
  ensure_sodium();
  SigningKeyPair kp;
  crypto_sign_ed25519_keypair(kp.public_key.data(), kp.secret_key.data());
  return kp;
}

KxKeyPair KxKeyPair::generate() {
  ensure_sodium();
  KxKeyPair kp;
  random_bytes(kp.secret_key);
  crypto_scalarmult_curve25519_base(kp.public_key.data(), kp.secret_key.data());
  return kp;
}

Digest sha256(ByteView data) {
  ensure_sodium();
  Digest d;
  crypto_hash_sha256(d.data(), data.data(), data.size());
  return d;
}

Digest hmac_sha256(ByteView key, ByteView data) {
  ensure_sodium();
  crypto_auth_hmacsha256_state st;
  crypto_auth_hmacsha256_init(&st, key.data(), key.size());
  crypto_auth_hmacsha256_update(&st, data.data(), data.size());
  Digest d;
  crypto_auth_hmacsha256_final(&st, d.data());
  return d;
}

Bytes hkdf_sha256(ByteView salt, ByteView ikm, std::string_view info, std::size_t length) {
  if (length > 255 * 32) throw std::invalid_argument("HKDF output too long");
  Digest zero_salt{};
  Digest prk = hmac_sha256(salt.empty() ? view(zero_salt) : salt, ikm);

  Bytes okm;
  okm.reserve(length);
  Bytes block;
  for (std::uint8_t counter = 1; okm.size() < length; ++counter) {
    Bytes input = block;
    input.insert(input.end(), info.begin(), info.end());
    input.push_back(counter);
    Digest t = hmac_sha256(view(prk), input);
    block.assign(t.begin(), t.end());
    std::size_t take = std::min(length - okm.size(), block.size());
    okm.insert(okm.end(), block.begin(), block.begin() + static_cast<std::ptrdiff_t>(take));
  }
  sodium_memzero(prk.data(), prk.size());
  return okm;
}

AeadKey hkdf_key(ByteView salt, ByteView ikm, std::string_view info) {
  Bytes okm = hkdf_sha256(salt, ikm, info, 32);
  AeadKey k;
  std::copy(okm.begin(), okm.end(), k.begin());
  sodium_memzero(okm.data(), okm.size());
  return k;
}

Signature sign(const SignSecretKey& sk, ByteView message) {
  ensure_sodium();
  Signature sig;
  crypto_sign_ed25519_detached(sig.data(), nullptr, message.data(), message.size(), sk.data());
  return sig;
}

bool verify(const SignPublicKey& pk, ByteView message, const Signature& sig) {
  ensure_sodium();
  return crypto_sign_ed25519_verify_detached(sig.data(), message.data(), message.size(), pk.data()) == 0;
}

Digest x25519(const KxSecretKey& sk, const KxPublicKey& peer) {
  ensure_sodium();
  Digest shared;
  if (crypto_scalarmult_curve25519(shared.data(), sk.data(), peer.data()) != 0)
    throw std::runtime_error("degenerate X25519 public key");
  return shared;
}

KxKeyPair kx_from_signing(const SigningKeyPair& signing) {
  ensure_sodium();
  KxKeyPair kp;
  if (crypto_sign_ed25519_pk_to_curve25519(kp.public_key.data(), signing.public_key.data()) != 0 ||
      crypto_sign_ed25519_sk_to_curve25519(kp.secret_key.data(), signing.secret_key.data()) != 0)
    throw std::runtime_error("signing key cannot be converted to X25519");
  return kp;
}

KxPublicKey kx_public_from_signing(const SignPublicKey& pk) {
  ensure_sodium();
  KxPublicKey out;
  if (crypto_sign_ed25519_pk_to_curve25519(out.data(), pk.data()) != 0)
    throw std::runtime_error("signing key cannot be converted to X25519");
  return out;
}

Bytes aead_seal(const AeadKey& key, const AeadNonce& nonce, ByteView ad, ByteView plaintext) {
  ensure_sodium();
  Bytes out(plaintext.size() + kAeadTagSize);
  unsigned long long len = 0;
  crypto_aead_chacha20poly1305_ietf_encrypt(out.data(), &len, plaintext.data(), plaintext.size(), ad.data(),
                                            ad.size(), nullptr, nonce.data(), key.data());
  out.resize(len);
  return out;
}

std::optional<Bytes> aead_open(const AeadKey& key, const AeadNonce& nonce, ByteView ad, ByteView ciphertext) {
  ensure_sodium();
  if (ciphertext.size() < kAeadTagSize) return std::nullopt;
  Bytes out(ciphertext.size() - kAeadTagSize);
  unsigned long long len = 0;
  if (crypto_aead_chacha20poly1305_ietf_decrypt(out.data(), &len, nullptr, ciphertext.data(), ciphertext.size(),
                                                ad.data(), ad.size(), nonce.data(), key.data()) != 0)
    return std::nullopt;
  out.resize(len);
  return out;
}

void random_bytes(std::span<std::uint8_t> out) {
  ensure_sodium();
  randombytes_buf(out.data(), out.size());
}

bool constant_time_equal(ByteView a, ByteView b) {
  ensure_sodium();
  return a.size() == b.size() && sodium_memcmp(a.data(), b.data(), a.size()) == 0;
}

}  // namespace sealed::crypto
