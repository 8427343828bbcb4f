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

#ifndef SEALED_CORE_DISPATCH_HPP
#define SEALED_CORE_DISPATCH_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sealed/core/message.hpp"
#include "sealed/core/value.hpp"
#include "sealed/ifc/context.hpp"

namespace sealed::core {

// Type-erased enclave function: arguments arrive decoded, the result leaves
// as a value. The runtime gives each call a fresh copy of context_template.
struct EnclaveFunction {
  std::string name;
  std::uint32_t arity = 0;
  ifc::IfcContext context_template = ifc::IfcContext::default_state();
  std::function<Value(ifc::IfcContext&, std::span<const Value>)> body;
};

// Why a call produced RESULT_ERR. Kept on the enclave side only: the wire
// response for every IFC rejection is identical.
enum class Rejection {
  kNone,
  kUnknownCall,
  kDecodeError,
  kIfcGuard,
  kOutputGate,
  kNotReady,
  kInternal,
};

struct DispatchOutcome {
  Bytes response;
  Rejection rejection = Rejection::kNone;
};

class DispatchTable {
 public:
  CallId add(EnclaveFunction fn);

  const EnclaveFunction* find(CallId id) const;
  std::size_t size() const { return entries_.size(); }

  // Applies to every call dispatched afterwards.
  void set_enforce_ifc(bool on) { enforce_ifc_ = on; }
  bool enforce_ifc() const { return enforce_ifc_; }

  // Runs one call: decode arguments, execute in a fresh context, consult the
  // output gate, encode the response. Never throws for call-level failures.
  DispatchOutcome dispatch(CallId id, std::span<const Bytes> args) const;
  // Same, from a raw CALL message.
  DispatchOutcome handle(ByteView call_message) const;

 private:
  std::vector<EnclaveFunction> entries_;
  bool enforce_ifc_ = true;
};

}  // namespace sealed::core

#endif  // SEALED_CORE_DISPATCH_HPP
