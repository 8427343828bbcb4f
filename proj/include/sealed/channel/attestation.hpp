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

#ifndef SEALED_CHANNEL_ATTESTATION_HPP
#define SEALED_CHANNEL_ATTESTATION_HPP

#include <map>
#include <optional>
#include <string>

#include "sealed/bytes.hpp"
#include "sealed/channel/crypto.hpp"
#include "sealed/core/app.hpp"

namespace sealed::channel {

using Measurement = crypto::Digest;

// H(codeVersion ‖ (callId, name) pairs in callId order ‖ H(config)).
// Every field is length-prefixed so distinct schemas cannot collide by
// concatenation.
Measurement compute_measurement(const core::App& app, ByteView config_bytes);

// Provisioned client verification keys, keyed by client name.
class CredentialRegistry {
 public:
  void add(std::string name, const crypto::SignPublicKey& key);
  const crypto::SignPublicKey* find(const std::string& name) const;
  std::size_t size() const { return keys_.size(); }
  // Canonical bytes (sorted by name) for the measurement.
  Bytes encode() const;

 private:
  std::map<std::string, crypto::SignPublicKey> keys_;
};

// Stands in for the platform's quoting service: signs (measurement ‖
// reportData) with the quoting-authority key that clients trust.
class Attestor {
 public:
  Attestor(crypto::SigningKeyPair authority, Measurement measurement)
      : authority_(authority), measurement_(measurement) {}

  const Measurement& measurement() const { return measurement_; }
  crypto::Signature quote(const crypto::Digest& report_data) const;

 private:
  crypto::SigningKeyPair authority_;
  Measurement measurement_;
};

}  // namespace sealed::channel

#endif  // SEALED_CHANNEL_ATTESTATION_HPP
