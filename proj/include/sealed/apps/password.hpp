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

#ifndef SEALED_APPS_PASSWORD_HPP
#define SEALED_APPS_PASSWORD_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "sealed/core/app.hpp"

namespace sealed::apps {

inline constexpr std::string_view kPasswordClientRole = "client";

struct PasswordOptions {
  std::string secret = "password";
  std::string owner = "Alice";
  // Adds leakpwd, which compares the guess against the secret without
  // privilege. Its result is always stopped at the output gate.
  bool with_leak = false;
};

struct PasswordApi {
  core::Secure<bool(std::string)> checkpwd;
  std::optional<core::Secure<bool(std::string)>> leakpwd;
};

// Registers the labeled secret and the enclave functions.
PasswordApi register_password_checker(core::App& app, const PasswordOptions& opts = {});

// The whole program, including the "client" body: prompt, read one line
// from `in`, ask the enclave, print the verdict to `out`.
void build_password_checker(core::App& app, std::istream& in, std::ostream& out,
                            const PasswordOptions& opts = {});

}  // namespace sealed::apps

#endif  // SEALED_APPS_PASSWORD_HPP
