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

#include "sealed/error.hpp"

namespace sealed {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIfcViolation: return "IFC_VIOLATION";
    case ErrorCode::kUnknownCall: return "UNKNOWN_CALL";
    case ErrorCode::kDecodeError: return "DECODE_ERROR";
    case ErrorCode::kAuthFailure: return "AUTH_FAILURE";
    case ErrorCode::kInternal: return "INTERNAL";
    case ErrorCode::kNotReady: return "NOT_READY";
  }
  return "UNKNOWN";
}

namespace {
const char* reason_text(AttestationFailure::Reason r) {
  switch (r) {
    case AttestationFailure::Reason::kBadSignature: return "attestation failure: bad quote signature";
    case AttestationFailure::Reason::kMeasurementMismatch: return "attestation failure: measurement mismatch";
    case AttestationFailure::Reason::kStaleBinding: return "attestation failure: stale report binding";
  }
  return "attestation failure";
}
}  // namespace

AttestationFailure::AttestationFailure(Reason reason)
    : std::runtime_error(reason_text(reason)), reason_(reason) {}

}  // namespace sealed
