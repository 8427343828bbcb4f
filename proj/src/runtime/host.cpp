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

#include "sealed/runtime/host.hpp"

#include "sealed/channel/transport.hpp"
#include "sealed/error.hpp"

namespace sealed::runtime {

void validate(const SecurityOptions& s) {
  if (s.client_auth && !s.attestation)
    throw UsageError("client signatures need attestation; pass --no-client-sig with --no-attestation");
}

Bytes measured_config(const channel::CredentialRegistry& credentials, const core::App& app) {
  Bytes out = credentials.encode();
  ByteWriter w(out);
  w.u32(static_cast<std::uint32_t>(app.provisioned().size())).raw(app.provisioned());
  return out;
}

channel::Measurement measure(const AppBuilder& build, const channel::CredentialRegistry& credentials,
                             const std::string& code_version) {
  core::App app(core::RoleId::enclave(), code_version);
  build(app);
  app.freeze();
  return channel::compute_measurement(app, measured_config(credentials, app));
}

EnclaveHost::EnclaveHost(EnclaveSetup setup, const AppBuilder& build) : setup_(std::move(setup)) {
  validate(setup_.security);
  app_ = std::make_unique<core::App>(core::RoleId::enclave(), setup_.code_version);
  build(*app_);
  app_->freeze();
  app_->dispatch_table().set_enforce_ifc(setup_.security.enforce_ifc);
  measurement_ = channel::compute_measurement(*app_, measured_config(setup_.credentials, *app_));
  if (setup_.security.attestation) attestor_ = std::make_unique<channel::Attestor>(setup_.authority, measurement_);

  channel::MonitorOptions mo;
  mo.attestation = setup_.security.attestation;
  mo.client_auth = setup_.security.client_auth;
  mo.io_timeout = setup_.io_timeout;
  listener_ = std::make_unique<net::Listener>(setup_.listen);
  monitor_ = std::make_unique<channel::Monitor>(app_->dispatch_table(), attestor_.get(), setup_.credentials, mo);
}

EnclaveHost::~EnclaveHost() { stop(); }

void EnclaveHost::serve(std::stop_token stop) { monitor_->serve(*listener_, stop); }

void EnclaveHost::start() {
  if (thread_.joinable()) return;
  thread_ = std::jthread([this](std::stop_token st) { serve(st); });
}

void EnclaveHost::stop() {
  if (!thread_.joinable()) return;
  thread_.request_stop();
  thread_.join();
}

void run_client_role(const ClientSetup& setup, const AppBuilder& build) {
  validate(setup.security);
  core::RoleId role(setup.role);
  if (role.is_enclave()) throw UsageError("the enclave role is not a client");
  core::App app(role, setup.code_version);

  // The factory runs at the first gateway call, after staging is frozen, so
  // a locally computed measurement sees the whole program.
  app.set_transport_factory([&]() -> std::unique_ptr<core::CallTransport> {
    channel::ChannelOptions o;
    o.endpoint = setup.enclave;
    o.attestation = setup.security.attestation;
    o.per_call_handshake = setup.security.per_call_handshake;
    o.io_timeout = setup.io_timeout;
    o.handshake.name = setup.identity.empty() ? setup.role : setup.identity;
    if (setup.security.client_auth) o.handshake.signing_key = setup.signing_key;
    o.handshake.quoting_authority = setup.authority_public;
    o.handshake.expected_measurement =
        setup.expected_measurement ? *setup.expected_measurement
                                   : channel::compute_measurement(app, measured_config(setup.credentials, app));
    if (o.attestation) return std::make_unique<channel::AttestedTransport>(o);
    return std::make_unique<channel::PlainTransport>(o);
  });
  build(app);
  app.freeze();
  if (!app.has_client(setup.role)) throw UsageError("unknown role: " + setup.role);
}

}  // namespace sealed::runtime
