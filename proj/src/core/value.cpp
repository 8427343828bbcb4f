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

#include "sealed/core/value.hpp"

#include <bit>
#include <iomanip>
#include <limits>
#include <ostream>

#include "sealed/error.hpp"

namespace sealed::core {

namespace {

template <class T>
const T& get_or_throw(const auto& v, const char* what) {
  if (const T* p = std::get_if<T>(&v)) return *p;
  throw DecodeError(std::string("type mismatch: expected ") + what);
}

void write_length(ByteWriter& out, std::size_t n) {
  if (n > std::numeric_limits<std::uint32_t>::max()) throw std::length_error("value too large to encode");
  out.u32(static_cast<std::uint32_t>(n));
}

Value decode_at_depth(ByteReader& in, std::size_t depth) {
  if (depth > kMaxNestingDepth) throw DecodeError("nesting too deep");
  auto tag = static_cast<Tag>(in.u8());
  switch (tag) {
    case Tag::kUnit:
      return Value::unit();
    case Tag::kBool: {
      std::uint8_t b = in.u8();
      if (b > 1) throw DecodeError("bool byte out of range");
      return Value::boolean(b == 1);
    }
    case Tag::kInt:
      return Value::integer(static_cast<std::int64_t>(in.u64()));
    case Tag::kFloat:
      return Value::real(std::bit_cast<double>(in.u64()));
    case Tag::kString: {
      auto s = in.raw(in.u32());
      if (!is_valid_utf8(s)) throw DecodeError("string is not UTF-8");
      return Value::string(sealed::to_string(s));
    }
    case Tag::kList: {
      std::uint32_t n = in.u32();
      // Every element takes at least one byte; reject impossible counts early.
      if (n > in.remaining()) throw DecodeError("list count exceeds input");
      Value::List items;
      items.reserve(n);
      for (std::uint32_t i = 0; i < n; ++i) items.push_back(decode_at_depth(in, depth + 1));
      return Value::list(std::move(items));
    }
    case Tag::kLabeled: {
      LabeledValue lv;
      lv.label = label::decode_label(in);
      std::size_t start = in.position();
      decode_at_depth(in, depth + 1);
      auto payload = in.consumed_since(start);
      lv.payload.assign(payload.begin(), payload.end());
      return Value::labeled(std::move(lv));
    }
    case Tag::kBytes: {
      auto b = in.raw(in.u32());
      return Value::bytes(Bytes(b.begin(), b.end()));
    }
  }
  throw DecodeError("unknown value tag");
}

}  // namespace

Tag Value::tag() const {
  static constexpr Tag kTags[] = {Tag::kUnit,   Tag::kBool, Tag::kInt,     Tag::kFloat,
                                  Tag::kString, Tag::kList, Tag::kLabeled, Tag::kBytes};
  return kTags[v_.index()];
}

bool Value::as_bool() const { return get_or_throw<bool>(v_, "bool"); }
std::int64_t Value::as_int() const { return get_or_throw<std::int64_t>(v_, "int"); }
double Value::as_real() const { return get_or_throw<double>(v_, "float"); }
const std::string& Value::as_string() const { return get_or_throw<std::string>(v_, "string"); }
const Value::List& Value::as_list() const { return get_or_throw<List>(v_, "list"); }
const LabeledValue& Value::as_labeled() const { return get_or_throw<LabeledValue>(v_, "labeled"); }
const Bytes& Value::as_bytes() const { return get_or_throw<Bytes>(v_, "bytes"); }

void encode_value(const Value& v, ByteWriter& out) {
  out.u8(static_cast<std::uint8_t>(v.tag()));
  switch (v.tag()) {
    case Tag::kUnit:
      break;
    case Tag::kBool:
      out.u8(v.as_bool() ? 1 : 0);
      break;
    case Tag::kInt:
      out.u64(static_cast<std::uint64_t>(v.as_int()));
      break;
    case Tag::kFloat:
      out.u64(std::bit_cast<std::uint64_t>(v.as_real()));
      break;
    case Tag::kString:
      write_length(out, v.as_string().size());
      out.raw(v.as_string());
      break;
    case Tag::kList:
      write_length(out, v.as_list().size());
      for (const auto& item : v.as_list()) encode_value(item, out);
      break;
    case Tag::kLabeled:
      label::encode_label(v.as_labeled().label, out);
      out.raw(v.as_labeled().payload);
      break;
    case Tag::kBytes:
      write_length(out, v.as_bytes().size());
      out.raw(v.as_bytes());
      break;
  }
}

Bytes encode_value(const Value& v) {
  Bytes b;
  ByteWriter w(b);
  encode_value(v, w);
  return b;
}

Value decode_value(ByteReader& in) { return decode_at_depth(in, 0); }

Value decode_value(ByteView bytes) {
  ByteReader in(bytes);
  Value v = decode_value(in);
  in.expect_end();
  return v;
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
  switch (v.tag()) {
    case Tag::kUnit: return os << "()";
    case Tag::kBool: return os << (v.as_bool() ? "True" : "False");
    case Tag::kInt: return os << v.as_int();
    case Tag::kFloat: return os << v.as_real();
    case Tag::kString: return os << std::quoted(v.as_string());
    case Tag::kList: {
      os << '[';
      for (std::size_t i = 0; i < v.as_list().size(); ++i) os << (i ? ", " : "") << v.as_list()[i];
      return os << ']';
    }
    case Tag::kLabeled: return os << "Labeled " << v.as_labeled().label << " (" << v.as_labeled().payload.size() << " bytes)";
    case Tag::kBytes: return os << "bytes[" << v.as_bytes().size() << ']';
  }
  return os;
}

}  // namespace sealed::core
