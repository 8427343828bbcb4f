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

#include "sealed/core/message.hpp"

#include <limits>

namespace sealed::core {

Bytes encode_call(const CallMessage& call) {
  if (call.args.size() > std::numeric_limits<std::uint16_t>::max())
    throw std::length_error("too many call arguments");
  Bytes out;
  ByteWriter w(out);
  w.u8(static_cast<std::uint8_t>(MessageType::kCall));
  w.u32(call.call_id.value);
  w.u16(static_cast<std::uint16_t>(call.args.size()));
  for (const auto& a : call.args) w.raw(a);
  return out;
}

CallMessage decode_call(ByteView bytes) {
  ByteReader in(bytes);
  if (in.u8() != static_cast<std::uint8_t>(MessageType::kCall)) throw DecodeError("not a CALL message");
  CallMessage call;
  call.call_id.value = in.u32();
  std::uint16_t argc = in.u16();
  for (std::uint16_t i = 0; i < argc; ++i) {
    std::size_t start = in.position();
    decode_value(in);
    auto arg = in.consumed_since(start);
    call.args.emplace_back(arg.begin(), arg.end());
  }
  in.expect_end();
  return call;
}

Bytes encode_result_ok(const Value& v) {
  Bytes out;
  ByteWriter w(out);
  w.u8(static_cast<std::uint8_t>(MessageType::kResultOk));
  encode_value(v, w);
  return out;
}

Bytes encode_result_err(ErrorCode code, std::string_view message) {
  Bytes out;
  ByteWriter w(out);
  w.u8(static_cast<std::uint8_t>(MessageType::kResultErr));
  w.u16(static_cast<std::uint16_t>(code));
  encode_value(Value::string(std::string(message)), w);
  return out;
}

Response decode_response(ByteView bytes) {
  ByteReader in(bytes);
  auto type = static_cast<MessageType>(in.u8());
  if (type == MessageType::kResultOk) {
    Value v = decode_value(in);
    in.expect_end();
    return v;
  }
  if (type == MessageType::kResultErr) {
    std::uint16_t code = in.u16();
    Value msg = decode_value(in);
    in.expect_end();
    if (code < 1 || code > static_cast<std::uint16_t>(ErrorCode::kNotReady))
      throw DecodeError("unknown error code");
    return ResultError{static_cast<ErrorCode>(code), msg.as_string()};
  }
  throw DecodeError("not a RESULT message");
}

}  // namespace sealed::core
