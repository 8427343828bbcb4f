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

#ifndef SEALED_RUNTIME_HOST_HPP
#define SEALED_RUNTIME_HOST_HPP

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <stop_token>
#include <string>
#include <thread>

#include "sealed/channel/attestation.hpp"
#include "sealed/channel/monitor.hpp"
#include "sealed/channel/net.hpp"
#include "sealed/core/app.hpp"

namespace sealed::runtime {

// Stages one program. Called once per process with the App for its role.
using AppBuilder = std::function<void(core::App&)>;

struct SecurityOptions {
  bool enforce_ifc = true;
  bool attestation = true;
  bool client_auth = true;
  bool per_call_handshake = false;
};

// Client authentication rides on the attested handshake, so it cannot be on
// without attestation. Throws UsageError.
void validate(const SecurityOptions& s);

// Configuration bytes the measurement covers: the credential registry and
// whatever the program provisioned while staging.
Bytes measured_config(const channel::CredentialRegistry& credentials, const core::App& app);

// Stages `build` in the enclave role and measures it.
channel::Measurement measure(const AppBuilder& build, const channel::CredentialRegistry& credentials,
                             const std::string& code_version = "sealed/1");

struct EnclaveSetup {
  net::Endpoint listen{"127.0.0.1", 0};
  SecurityOptions security;
  crypto::SigningKeyPair authority;
  channel::CredentialRegistry credentials;
  std::string code_version = "sealed/1";
  std::chrono::milliseconds io_timeout{5000};
};

// The enclave role: stages the program, measures it, binds the listener and
// serves calls through the monitor.
class EnclaveHost {
 public:
  EnclaveHost(EnclaveSetup setup, const AppBuilder& build);
  ~EnclaveHost();
  EnclaveHost(const EnclaveHost&) = delete;
  EnclaveHost& operator=(const EnclaveHost&) = delete;

  const channel::Measurement& measurement() const { return measurement_; }
  net::Endpoint endpoint() const { return listener_->endpoint(); }
  core::App& app() { return *app_; }
  channel::Monitor& monitor() { return *monitor_; }

  // Blocks until stop is requested.
  void serve(std::stop_token stop);
  // Serves on a background thread until stop() or destruction.
  void start();
  void stop();

 private:
  EnclaveSetup setup_;
  std::unique_ptr<core::App> app_;
  channel::Measurement measurement_{};
  std::unique_ptr<channel::Attestor> attestor_;
  std::unique_ptr<net::Listener> listener_;
  std::unique_ptr<channel::Monitor> monitor_;
  std::jthread thread_;
};

struct ClientSetup {
  std::string role;
  net::Endpoint enclave;
  SecurityOptions security;
  // Name presented in the handshake; defaults to the role.
  std::string identity;
  std::optional<crypto::SignSecretKey> signing_key;
  crypto::SignPublicKey authority_public{};
  // When absent the client measures its own copy of the program.
  std::optional<channel::Measurement> expected_measurement;
  channel::CredentialRegistry credentials;
  std::string code_version = "sealed/1";
  std::chrono::milliseconds io_timeout{5000};
};

// A client role: stages the program and runs that client's body, which
// connects on its first gateway call. Throws UsageError for a role the
// program does not define, plus whatever the body throws.
void run_client_role(const ClientSetup& setup, const AppBuilder& build);

}  // namespace sealed::runtime

#endif  // SEALED_RUNTIME_HOST_HPP
