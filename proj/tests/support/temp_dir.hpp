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

#ifndef SEALED_TESTS_TEMP_DIR_HPP
#define SEALED_TESTS_TEMP_DIR_HPP

#include <filesystem>
#include <string>

#include "sealed/channel/crypto.hpp"

namespace sealed::testing {

class TempDir {
 public:
  explicit TempDir(const std::string& prefix = "sealed")
      : path_(std::filesystem::temp_directory_path() /
              (prefix + "-" + to_hex(crypto::view(crypto::random_array<6>())))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace sealed::testing

#endif  // SEALED_TESTS_TEMP_DIR_HPP
