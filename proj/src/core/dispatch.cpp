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

#include "sealed/core/dispatch.hpp"

#include <limits>

#include "sealed/error.hpp"

namespace sealed::core {

CallId DispatchTable::add(EnclaveFunction fn) {
  if (entries_.size() >= std::numeric_limits<std::uint32_t>::max())
    throw std::length_error("dispatch table full");
  entries_.push_back(std::move(fn));
  return CallId{static_cast<std::uint32_t>(entries_.size() - 1)};
}

const EnclaveFunction* DispatchTable::find(CallId id) const {
  if (id.value >= entries_.size()) return nullptr;
  return &entries_[id.value];
}

namespace {
DispatchOutcome reject(Rejection why, ErrorCode code, std::string_view message) {
  return {encode_result_err(code, message), why};
}
}  // namespace

DispatchOutcome DispatchTable::dispatch(CallId id, std::span<const Bytes> args) const {
  const EnclaveFunction* fn = find(id);
  if (fn == nullptr) return reject(Rejection::kUnknownCall, ErrorCode::kUnknownCall, "unknown call");
  if (args.size() != fn->arity)
    return reject(Rejection::kDecodeError, ErrorCode::kDecodeError, "argument count mismatch");

  std::vector<Value> decoded;
  decoded.reserve(args.size());
  try {
    for (const auto& a : args) decoded.push_back(decode_value(a));
  } catch (const DecodeError& e) {
    return reject(Rejection::kDecodeError, ErrorCode::kDecodeError, e.what());
  }

  ifc::IfcContext ctx = fn->context_template;
  ctx.set_enforcing(enforce_ifc_);
  Value result;
  try {
    result = fn->body(ctx, decoded);
  } catch (const IfcViolation&) {
    return reject(Rejection::kIfcGuard, ErrorCode::kIfcViolation, kIfcViolationMessage);
  } catch (const DecodeError& e) {
    if (!ctx.output_gate()) return reject(Rejection::kOutputGate, ErrorCode::kIfcViolation, kIfcViolationMessage);
    return reject(Rejection::kDecodeError, ErrorCode::kDecodeError, e.what());
  } catch (const NotReady& e) {
    if (!ctx.output_gate()) return reject(Rejection::kOutputGate, ErrorCode::kIfcViolation, kIfcViolationMessage);
    return reject(Rejection::kNotReady, ErrorCode::kNotReady, e.what());
  } catch (const std::exception&) {
    // Which error a tainted computation hit is itself an output.
    if (!ctx.output_gate()) return reject(Rejection::kOutputGate, ErrorCode::kIfcViolation, kIfcViolationMessage);
    return reject(Rejection::kInternal, ErrorCode::kInternal, "internal error");
  }

  // The single release point for results.
  if (!ctx.output_gate())
    return reject(Rejection::kOutputGate, ErrorCode::kIfcViolation, kIfcViolationMessage);
  return {encode_result_ok(result), Rejection::kNone};
}

DispatchOutcome DispatchTable::handle(ByteView call_message) const {
  CallMessage call;
  try {
    call = decode_call(call_message);
  } catch (const DecodeError& e) {
    return reject(Rejection::kDecodeError, ErrorCode::kDecodeError, e.what());
  }
  return dispatch(call.call_id, call.args);
}

}  // namespace sealed::core
