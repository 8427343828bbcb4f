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

#ifndef SEALED_CORE_VALUE_HPP
#define SEALED_CORE_VALUE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "sealed/bytes.hpp"
#include "sealed/ifc/labeled.hpp"

namespace sealed::core {

using ifc::LabeledValue;

// Codec tags.
enum class Tag : std::uint8_t {
  kUnit = 0x01,
  kBool = 0x02,
  kInt = 0x03,
  kFloat = 0x04,
  kString = 0x05,
  kList = 0x06,
  kLabeled = 0x07,
  kBytes = 0x08,
};

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};

// A boundary value: anything that can be an enclave-call argument or result.
class Value {
 public:
  using List = std::vector<Value>;

  Value() = default;

  static Value unit() { return Value(Storage(Unit{})); }
  static Value boolean(bool b) { return Value(Storage(b)); }
  static Value integer(std::int64_t i) { return Value(Storage(i)); }
  static Value real(double d) { return Value(Storage(d)); }
  static Value string(std::string s) { return Value(Storage(std::move(s))); }
  static Value list(List items) { return Value(Storage(std::move(items))); }
  static Value labeled(LabeledValue lv) { return Value(Storage(std::move(lv))); }
  static Value bytes(Bytes b) { return Value(Storage(std::move(b))); }

  Tag tag() const;

  // Typed accessors throw DecodeError on a tag mismatch.
  bool as_bool() const;
  std::int64_t as_int() const;
  double as_real() const;
  const std::string& as_string() const;
  const List& as_list() const;
  const LabeledValue& as_labeled() const;
  const Bytes& as_bytes() const;

  // Structural equality; doubles compare with ==, so NaN != NaN.
  friend bool operator==(const Value&, const Value&) = default;

 private:
  using Storage = std::variant<Unit, bool, std::int64_t, double, std::string, List, LabeledValue, Bytes>;
  explicit Value(Storage s) : v_(std::move(s)) {}

  Storage v_;
};

inline constexpr std::size_t kMaxNestingDepth = 64;

void encode_value(const Value& v, ByteWriter& out);
Bytes encode_value(const Value& v);
// Throws DecodeError on unknown tags, truncation, invalid UTF-8, malformed
// labels or nesting deeper than kMaxNestingDepth.
Value decode_value(ByteReader& in);
// As above, and the value must span the whole buffer.
Value decode_value(ByteView bytes);

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace sealed::core

#endif  // SEALED_CORE_VALUE_HPP
