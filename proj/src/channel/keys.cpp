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

#include "sealed/channel/keys.hpp"

#include <fstream>
#include <sstream>

namespace sealed::crypto {

Bytes read_key_file(const std::filesystem::path& path, std::size_t expected_size) {
  std::ifstream in(path);
  if (!in) throw KeyFileError("cannot open key file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  Bytes key;
  try {
    key = from_hex(text);
  } catch (const std::invalid_argument&) {
    throw KeyFileError("key file is not hex: " + path.string());
  }
  if (key.size() != expected_size)
    throw KeyFileError("key file " + path.string() + " holds " + std::to_string(key.size()) +
                       " bytes, expected " + std::to_string(expected_size));
  return key;
}

void write_key_file(const std::filesystem::path& path, ByteView key, bool overwrite, bool secret) {
  namespace fs = std::filesystem;
  if (!overwrite && fs::exists(path)) throw KeyFileError("refusing to overwrite " + path.string());
  {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw KeyFileError("cannot write key file " + path.string());
    out << to_hex(key) << '\n';
    if (!out) throw KeyFileError("cannot write key file " + path.string());
  }
  if (secret) fs::permissions(path, fs::perms::owner_read | fs::perms::owner_write, fs::perm_options::replace);
}

}  // namespace sealed::crypto
