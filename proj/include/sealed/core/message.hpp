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

#ifndef SEALED_CORE_MESSAGE_HPP
#define SEALED_CORE_MESSAGE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sealed/bytes.hpp"
#include "sealed/core/value.hpp"
#include "sealed/error.hpp"

namespace sealed::core {

// Dense identifier of an enclave function, assigned from 0 in registration order.
struct CallId {
  std::uint32_t value = 0;
  friend auto operator<=>(const CallId&, const CallId&) = default;
};

enum class MessageType : std::uint8_t {
  kCall = 0x01,
  kResultOk = 0x02,
  kResultErr = 0x03,
};

// CALL = 0x01 ‖ u32 callId ‖ u16 argc ‖ args. Each argument is one
// codec-encoded value.
struct CallMessage {
  CallId call_id;
  std::vector<Bytes> args;
};

Bytes encode_call(const CallMessage& call);
// Every argument must be a well-formed value. Throws DecodeError.
CallMessage decode_call(ByteView bytes);

struct ResultError {
  ErrorCode code;
  std::string message;
};

// RESULT_OK = 0x02 ‖ value; RESULT_ERR = 0x03 ‖ u16 code ‖ string value.
Bytes encode_result_ok(const Value& v);
Bytes encode_result_err(ErrorCode code, std::string_view message);

using Response = std::variant<Value, ResultError>;
// Throws DecodeError.
Response decode_response(ByteView bytes);

}  // namespace sealed::core

#endif  // SEALED_CORE_MESSAGE_HPP
