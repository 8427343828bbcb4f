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

#ifndef SEALED_ERROR_HPP
#define SEALED_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sealed {

// Wire error codes carried by RESULT_ERR.
enum class ErrorCode : std::uint16_t {
  kIfcViolation = 1,
  kUnknownCall = 2,
  kDecodeError = 3,
  kAuthFailure = 4,
  kInternal = 5,
  // A query ran before its inputs arrived.
  kNotReady = 6,
};

std::string_view error_code_name(ErrorCode code);

// The only message an IFC rejection ever carries, whatever label caused it.
inline constexpr std::string_view kIfcViolationMessage = "IFC violation";

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class IfcViolation : public Error {
 public:
  IfcViolation() : Error(ErrorCode::kIfcViolation, std::string(kIfcViolationMessage)) {}
};

class DecodeError : public Error {
 public:
  explicit DecodeError(const std::string& what) : Error(ErrorCode::kDecodeError, what) {}
};

// Label bytes that do not decode to a canonical label.
class MalformedLabel : public DecodeError {
 public:
  explicit MalformedLabel(const std::string& what) : DecodeError("malformed label: " + what) {}
};

class AuthFailure : public Error {
 public:
  explicit AuthFailure(const std::string& what = "authentication failure")
      : Error(ErrorCode::kAuthFailure, what) {}
};

class NotReady : public Error {
 public:
  explicit NotReady(const std::string& what = "not ready") : Error(ErrorCode::kNotReady, what) {}
};

// A RESULT_ERR received from the enclave.
class RemoteError : public Error {
 public:
  RemoteError(ErrorCode code, const std::string& what) : Error(code, what) {}
};

class InvalidPrincipal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Misuse of the client API (arity overflow, incomplete calls).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Registration after the staging phase was frozen, or enclave data touched
// from a client role.
class StagingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class AttestationFailure : public std::runtime_error {
 public:
  enum class Reason { kBadSignature, kMeasurementMismatch, kStaleBinding };

  explicit AttestationFailure(Reason reason);
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// AEAD failure or counter mismatch on an established session.
class SessionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sealed

#endif  // SEALED_ERROR_HPP
