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

#ifndef SEALED_BYTES_HPP
#define SEALED_BYTES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sealed {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline std::string to_string(ByteView b) {
  return {reinterpret_cast<const char*>(b.data()), b.size()};
}

std::string to_hex(ByteView b);
// Throws std::invalid_argument on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

bool is_valid_utf8(ByteView b);

// Big-endian appender used by every wire format in the project.
class ByteWriter {
 public:
  ByteWriter() = default;
  explicit ByteWriter(Bytes& out) : out_(&out) {}

  ByteWriter& u8(std::uint8_t v);
  ByteWriter& u16(std::uint16_t v);
  ByteWriter& u32(std::uint32_t v);
  ByteWriter& u64(std::uint64_t v);
  ByteWriter& raw(ByteView b);
  ByteWriter& raw(std::string_view s) { return raw(as_bytes(s)); }

  Bytes& bytes() { return *out_; }
  Bytes take() { return std::move(*out_); }

 private:
  Bytes own_;
  Bytes* out_ = &own_;
};

// Cursor over an input buffer. Every read past the end throws DecodeError.
class ByteReader {
 public:
  explicit ByteReader(ByteView in) : in_(in) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  ByteView raw(std::size_t n);

  // Bytes already consumed in [from, position()).
  ByteView consumed_since(std::size_t from) const { return in_.subspan(from, pos_ - from); }

  std::size_t remaining() const { return in_.size() - pos_; }
  std::size_t position() const { return pos_; }
  bool empty() const { return remaining() == 0; }
  // Throws DecodeError unless the whole input was consumed.
  void expect_end() const;

 private:
  ByteView in_;
  std::size_t pos_ = 0;
};

}  // namespace sealed

#endif  // SEALED_BYTES_HPP
