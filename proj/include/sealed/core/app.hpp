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

#ifndef SEALED_CORE_APP_HPP
#define SEALED_CORE_APP_HPP

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "sealed/core/dispatch.hpp"
#include "sealed/core/message.hpp"
#include "sealed/core/traits.hpp"
#include "sealed/error.hpp"
#include "sealed/ifc/context.hpp"

namespace sealed::core {

inline constexpr std::string_view kEnclaveRole = "enclave";

// Which party this process plays: the enclave or one named client.
class RoleId {
 public:
  // Throws std::invalid_argument on an empty identifier.
  explicit RoleId(std::string id);
  static RoleId enclave() { return RoleId(std::string(kEnclaveRole)); }

  const std::string& str() const { return id_; }
  bool is_enclave() const { return id_ == kEnclaveRole; }

  friend bool operator==(const RoleId&, const RoleId&) = default;

 private:
  std::string id_;
};

// Client-side handle to an enclave function: the call identifier plus the
// arguments gathered so far.
class SecureRef {
 public:
  SecureRef(CallId id, std::uint32_t arity) : id_(id), arity_(arity) {}

  CallId call_id() const { return id_; }
  std::uint32_t arity() const { return arity_; }
  const std::vector<Bytes>& args() const { return args_; }
  bool saturated() const { return args_.size() == arity_; }

  // Throws UsageError when all arguments are already collected.
  SecureRef apply_arg(const Value& v) const;

 private:
  CallId id_;
  std::uint32_t arity_;
  std::vector<Bytes> args_;
};

// Typed view over SecureRef. apply() peels one parameter at a time, so a
// Secure<R()> is ready for a gateway call.
template <class Sig>
class Secure;

template <class R>
class Secure<R()> {
 public:
  explicit Secure(SecureRef ref) : ref_(std::move(ref)) {}
  const SecureRef& ref() const { return ref_; }

 private:
  SecureRef ref_;
};

template <class R, class First, class... Rest>
class Secure<R(First, Rest...)> {
 public:
  explicit Secure(SecureRef ref) : ref_(std::move(ref)) {}
  const SecureRef& ref() const { return ref_; }

  Secure<R(Rest...)> apply(const std::decay_t<First>& arg) const {
    return Secure<R(Rest...)>(ref_.apply_arg(to_value(arg)));
  }

 private:
  SecureRef ref_;
};

// Carries one CALL message to the enclave and returns the raw response.
class CallTransport {
 public:
  virtual ~CallTransport() = default;
  virtual Bytes roundtrip(ByteView call_message) = 0;
};

using TransportFactory = std::function<std::unique_ptr<CallTransport>()>;

// In-process transport straight into a dispatch table.
class LocalTransport : public CallTransport {
 public:
  explicit LocalTransport(const DispatchTable& table) : table_(&table) {}
  Bytes roundtrip(ByteView call_message) override { return table_->handle(call_message).response; }

 private:
  const DispatchTable* table_;
};

// The view a client body has of the application.
class Client {
 public:
  Client(std::string name, TransportFactory connect)
      : name_(std::move(name)), connect_(std::move(connect)) {}

  const std::string& name() const { return name_; }

  // Sends the call and blocks for the result. Throws UsageError on missing
  // arguments, RemoteError for RESULT_ERR, DecodeError for a bad response,
  // plus whatever the transport throws.
  Value gateway(const SecureRef& call);

  template <class R>
  R gateway(const Secure<R()>& call) {
    Value v = gateway(call.ref());
    if constexpr (std::is_void_v<R>) {
      return;
    } else {
      return from_value<R>(v);
    }
  }

  // Drops the current connection; the next call opens a fresh one.
  void reset_connection() { transport_.reset(); }

 private:
  std::string name_;
  TransportFactory connect_;
  std::unique_ptr<CallTransport> transport_;
};

// Enclave-resident labeled constant. Empty in client roles.
class LabeledHandle {
 public:
  LabeledHandle() = default;
  explicit LabeledHandle(std::shared_ptr<const LabeledValue> v) : v_(std::move(v)) {}
  // Throws StagingError outside the enclave role.
  const LabeledValue& get() const;

 private:
  std::shared_ptr<const LabeledValue> v_;
};

// Enclave-resident labeled reference. Empty in client roles.
class RefHandle {
 public:
  RefHandle() = default;
  explicit RefHandle(std::shared_ptr<ifc::LabeledRef> r) : r_(std::move(r)) {}
  // Throws StagingError outside the enclave role.
  ifc::LabeledRef& get() const;

 private:
  std::shared_ptr<ifc::LabeledRef> r_;
};

struct FunctionInfo {
  CallId id;
  std::string name;
  std::uint32_t arity;
};

namespace detail {

template <class Sig>
struct Signature;

template <class R, class... A>
struct Signature<R(A...)> {
  static constexpr std::uint32_t arity = sizeof...(A);

  template <class F, std::size_t... I>
  static Value call(F& fn, ifc::IfcContext& ctx, std::span<const Value> args,
                    std::index_sequence<I...>) {
    if constexpr (std::is_void_v<R>) {
      fn(ctx, from_value<std::decay_t<A>>(args[I])...);
      return Value::unit();
    } else {
      return to_value<R>(fn(ctx, from_value<std::decay_t<A>>(args[I])...));
    }
  }

  template <class F>
  static std::function<Value(ifc::IfcContext&, std::span<const Value>)> erase(F fn) {
    return [fn = std::move(fn)](ifc::IfcContext& ctx, std::span<const Value> args) mutable {
      return call(fn, ctx, args, std::index_sequence_for<A...>{});
    };
  }
};

}  // namespace detail

// The staging area. One program registers enclave functions, labeled data
// and every client body; the role decides which parts are real in this
// process. Registration order fixes the call identifiers, so all roles
// agree on them as long as they stage the same program.
class App {
 public:
  explicit App(RoleId role, std::string code_version = "sealed/1");

  const RoleId& role() const { return role_; }
  const std::string& code_version() const { return code_version_; }

  // Registers an enclave function with signature Sig; the body is called as
  // fn(IfcContext&, args...). Client roles keep only the identifier.
  template <class Sig, class F>
  Secure<Sig> in_enclave(std::string name, ifc::IfcContext context_template, F fn) {
    using S = detail::Signature<Sig>;
    EnclaveFunction entry{std::move(name), S::arity, std::move(context_template), {}};
    if (role_.is_enclave()) entry.body = S::erase(std::move(fn));
    return Secure<Sig>(register_function(std::move(entry)));
  }

  LabeledHandle labeled_constant(const label::DCLabel& l, const Value& v);
  RefHandle new_ref(const label::DCLabel& l, const Value& v);

  // Runs body now if this process plays `name`; otherwise does nothing.
  // The first call freezes staging.
  void run_client(const std::string& name, const std::function<void(Client&)>& body);

  // Material the enclave is provisioned with; feeds the measurement.
  void provision(ByteView config);
  const Bytes& provisioned() const { return provisioned_; }

  void set_transport_factory(TransportFactory f) { transport_factory_ = std::move(f); }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  const std::vector<FunctionInfo>& functions() const { return functions_; }
  const std::vector<std::string>& client_names() const { return client_names_; }
  bool has_client(const std::string& name) const;

  // Populated only in the enclave role.
  DispatchTable& dispatch_table() { return table_; }
  const DispatchTable& dispatch_table() const { return table_; }

 private:
  SecureRef register_function(EnclaveFunction entry);
  void check_staging() const;

  RoleId role_;
  std::string code_version_;
  bool frozen_ = false;
  std::vector<FunctionInfo> functions_;
  std::vector<std::string> client_names_;
  DispatchTable table_;
  Bytes provisioned_;
  TransportFactory transport_factory_;
};

}  // namespace sealed::core

#endif  // SEALED_CORE_APP_HPP
