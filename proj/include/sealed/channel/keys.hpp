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

#ifndef SEALED_CHANNEL_KEYS_HPP
#define SEALED_CHANNEL_KEYS_HPP

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "sealed/bytes.hpp"

namespace sealed::crypto {

class KeyFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Key files hold one raw key, hex-encoded, optionally newline-terminated.
Bytes read_key_file(const std::filesystem::path& path, std::size_t expected_size);

template <std::size_t N>
std::array<std::uint8_t, N> read_key(const std::filesystem::path& path) {
  Bytes b = read_key_file(path, N);
  std::array<std::uint8_t, N> out;
  std::copy(b.begin(), b.end(), out.begin());
  return out;
}

// Throws KeyFileError if the file exists and overwrite is false. Secret
// keys are written with owner-only permissions.
void write_key_file(const std::filesystem::path& path, ByteView key, bool overwrite, bool secret);

}  // namespace sealed::crypto

#endif  // SEALED_CHANNEL_KEYS_HPP
