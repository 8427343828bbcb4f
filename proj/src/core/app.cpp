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

#include "sealed/core/app.hpp"

#include <algorithm>
#include <stdexcept>

namespace sealed::core {

RoleId::RoleId(std::string id) : id_(std::move(id)) {
  if (id_.empty()) throw std::invalid_argument("role identifier is empty");
}

SecureRef SecureRef::apply_arg(const Value& v) const {
  if (saturated()) throw UsageError("too many arguments for enclave function");
  SecureRef out = *this;
  out.args_.push_back(encode_value(v));
  return out;
}

Value Client::gateway(const SecureRef& call) {
  if (!call.saturated()) throw UsageError("enclave function called with missing arguments");
  if (!connect_) throw UsageError("client has no transport to the enclave");
  if (!transport_) transport_ = connect_();

  Bytes response = transport_->roundtrip(encode_call({call.call_id(), call.args()}));
  Response r = decode_response(response);
  if (auto* err = std::get_if<ResultError>(&r)) throw RemoteError(err->code, err->message);
  return std::get<Value>(std::move(r));
}

const LabeledValue& LabeledHandle::get() const {
  if (!v_) throw StagingError("enclave constant accessed outside the enclave role");
  return *v_;
}

ifc::LabeledRef& RefHandle::get() const {
  if (!r_) throw StagingError("enclave reference accessed outside the enclave role");
  return *r_;
}

App::App(RoleId role, std::string code_version)
    : role_(std::move(role)), code_version_(std::move(code_version)) {}

void App::check_staging() const {
  if (frozen_) throw StagingError("registration after staging was frozen");
}

SecureRef App::register_function(EnclaveFunction entry) {
  check_staging();
  CallId id{static_cast<std::uint32_t>(functions_.size())};
  functions_.push_back({id, entry.name, entry.arity});
  std::uint32_t arity = entry.arity;
  if (role_.is_enclave()) table_.add(std::move(entry));
  return SecureRef(id, arity);
}

LabeledHandle App::labeled_constant(const label::DCLabel& l, const Value& v) {
  check_staging();
  if (!role_.is_enclave()) return LabeledHandle();
  // Staging is trusted: it may create data at any label.
  return LabeledHandle(std::make_shared<const LabeledValue>(LabeledValue{l, encode_value(v)}));
}

RefHandle App::new_ref(const label::DCLabel& l, const Value& v) {
  check_staging();
  if (!role_.is_enclave()) return RefHandle();
  return RefHandle(std::make_shared<ifc::LabeledRef>(l, encode_value(v)));
}

void App::run_client(const std::string& name, const std::function<void(Client&)>& body) {
  if (name == kEnclaveRole) throw StagingError("client may not use the enclave role name");
  if (has_client(name)) throw StagingError("duplicate client name: " + name);
  frozen_ = true;
  client_names_.push_back(name);
  if (role_.is_enclave() || role_.str() != name) return;
  Client client(name, transport_factory_);
  body(client);
}

void App::provision(ByteView config) {
  check_staging();
  provisioned_.insert(provisioned_.end(), config.begin(), config.end());
}

bool App::has_client(const std::string& name) const {
  return std::find(client_names_.begin(), client_names_.end(), name) != client_names_.end();
}

}  // namespace sealed::core
