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

#ifndef SEALED_CHANNEL_SESSION_HPP
#define SEALED_CHANNEL_SESSION_HPP

#include <array>
#include <cstdint>

#include "sealed/bytes.hpp"
#include "sealed/channel/crypto.hpp"

namespace sealed::channel {

inline constexpr std::uint8_t kRecordType = 0x13;

using SessionId = std::array<std::uint8_t, 16>;

// One direction-pair of AEAD keys with implicit per-direction counters.
// The nonce is four zero bytes followed by the big-endian record sequence
// number, so replayed, dropped or reordered records fail to open.
class Session {
 public:
  Session(SessionId id, crypto::AeadKey send_key, crypto::AeadKey recv_key)
      : id_(id), send_key_(send_key), recv_key_(recv_key) {}

  const SessionId& id() const { return id_; }

  // Returns 0x13 ‖ ciphertext ‖ tag.
  Bytes seal(ByteView plaintext);
  // Throws SessionError on a bad record; the session is then unusable.
  Bytes open(ByteView record);

  std::uint64_t sent() const { return send_seq_; }
  std::uint64_t received() const { return recv_seq_; }

 private:
  SessionId id_;
  crypto::AeadKey send_key_;
  crypto::AeadKey recv_key_;
  std::uint64_t send_seq_ = 0;
  std::uint64_t recv_seq_ = 0;
  bool broken_ = false;
};

}  // namespace sealed::channel

#endif  // SEALED_CHANNEL_SESSION_HPP
