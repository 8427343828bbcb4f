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

#include "sealed/channel/attestation.hpp"

namespace sealed::channel {

namespace {
void put_string(ByteWriter& w, std::string_view s) {
  w.u32(static_cast<std::uint32_t>(s.size()));
  w.raw(s);
}
}  // namespace

Measurement compute_measurement(const core::App& app, ByteView config_bytes) {
  Bytes buf;
  ByteWriter w(buf);
  put_string(w, "sealed-measurement-v1");
  put_string(w, app.code_version());
  // functions() is already in CallId order.
  w.u32(static_cast<std::uint32_t>(app.functions().size()));
  for (const auto& f : app.functions()) {
    w.u32(f.id.value);
    put_string(w, f.name);
  }
  w.raw(crypto::view(crypto::sha256(config_bytes)));
  return crypto::sha256(buf);
}

void CredentialRegistry::add(std::string name, const crypto::SignPublicKey& key) {
  keys_[std::move(name)] = key;
}

const crypto::SignPublicKey* CredentialRegistry::find(const std::string& name) const {
  auto it = keys_.find(name);
  return it == keys_.end() ? nullptr : &it->second;
}

Bytes CredentialRegistry::encode() const {
  Bytes buf;
  ByteWriter w(buf);
  w.u32(static_cast<std::uint32_t>(keys_.size()));
  for (const auto& [name, key] : keys_) {
    put_string(w, name);
    w.raw(crypto::view(key));
  }
  return buf;
}

crypto::Signature Attestor::quote(const crypto::Digest& report_data) const {
  Bytes signed_part;
  ByteWriter w(signed_part);
  w.raw(crypto::view(measurement_)).raw(crypto::view(report_data));
  return crypto::sign(authority_.secret_key, signed_part);
}

}  // namespace sealed::channel
