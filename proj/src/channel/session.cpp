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

#include "sealed/channel/session.hpp"

#include "sealed/error.hpp"

namespace sealed::channel {

namespace {

crypto::AeadNonce nonce_for(std::uint64_t seq) {
  crypto::AeadNonce n{};
  for (int i = 0; i < 8; ++i) n[4 + i] = static_cast<std::uint8_t>(seq >> (8 * (7 - i)));
  return n;
}

Bytes associated_data(const SessionId& id) {
  Bytes ad;
  ad.reserve(1 + id.size());
  ad.push_back(kRecordType);
  ad.insert(ad.end(), id.begin(), id.end());
  return ad;
}

}  // namespace

Bytes Session::seal(ByteView plaintext) {
  if (broken_) throw SessionError("session closed after a failed record");
  Bytes ct = crypto::aead_seal(send_key_, nonce_for(send_seq_), associated_data(id_), plaintext);
  ++send_seq_;
  Bytes out;
  out.reserve(1 + ct.size());
  out.push_back(kRecordType);
  out.insert(out.end(), ct.begin(), ct.end());
  return out;
}

Bytes Session::open(ByteView record) {
  if (broken_) throw SessionError("session closed after a failed record");
  if (record.empty() || record[0] != kRecordType) {
    broken_ = true;
    throw SessionError("unexpected frame type in session");
  }
  auto pt = crypto::aead_open(recv_key_, nonce_for(recv_seq_), associated_data(id_), record.subspan(1));
  if (!pt) {
    broken_ = true;
    throw SessionError("record authentication failed");
  }
  ++recv_seq_;
  return std::move(*pt);
}

}  // namespace sealed::channel
