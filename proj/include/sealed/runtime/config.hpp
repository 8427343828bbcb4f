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

#ifndef SEALED_RUNTIME_CONFIG_HPP
#define SEALED_RUNTIME_CONFIG_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sealed/channel/attestation.hpp"
#include "sealed/channel/crypto.hpp"
#include "sealed/channel/net.hpp"
#include "sealed/runtime/host.hpp"

namespace sealed::runtime {

inline constexpr std::string_view kPasswordApp = "password-checker";
inline constexpr std::string_view kCleanroomApp = "cleanroom";

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeyPaths {
  std::filesystem::path public_key;
  std::filesystem::path secret_key;
};

// Deployment description. Relative paths resolve against the directory the
// file was loaded from.
struct RunConfig {
  std::filesystem::path base_dir = ".";
  std::string app = std::string(kCleanroomApp);
  net::Endpoint enclave_address{"127.0.0.1", 7000};
  KeyPaths authority;
  // Party name -> key files. Every party is a provisioned client.
  std::map<std::string, KeyPaths> parties;
  // Client role -> party it authenticates as. Unlisted roles use their own name.
  std::map<std::string, std::string> identities;
  // App name -> hex measurement clients expect.
  std::map<std::string, std::string> expected_measurement;
  // Provider role -> principal its rows are labeled with.
  std::map<std::string, std::string> providers{{"P1", "P1"}, {"P2", "P2"}};
  std::string consumer = "C1";
  std::size_t readiness_threshold = 1;
  // Provider role -> CSV file.
  std::map<std::string, std::filesystem::path> data_files;

  // Throws ConfigError.
  static RunConfig load(const std::filesystem::path& path);
  static RunConfig parse(const std::string& json_text, const std::filesystem::path& base_dir);
  std::string to_json() const;
  void save(const std::filesystem::path& path) const;

  std::filesystem::path resolve(const std::filesystem::path& p) const;
  std::string identity_for(const std::string& role) const;

  // Key-file loaders; all throw ConfigError or crypto::KeyFileError.
  crypto::SignPublicKey authority_public() const;
  crypto::SigningKeyPair authority_pair() const;
  crypto::SigningKeyPair party_pair(const std::string& party) const;
  crypto::SignPublicKey party_public(const std::string& party) const;
  channel::CredentialRegistry credentials() const;
  std::optional<channel::Measurement> measurement_for(const std::string& app) const;
};

struct ProgramIo {
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
};

// The staging function for `app` as seen by `role`. Only the consumer role
// loads a secret key.
AppBuilder make_builder(const RunConfig& cfg, const std::string& app, const std::string& role, ProgramIo io);

std::vector<std::string> client_roles(const std::string& app);

struct ProvisionedKey {
  std::string party;
  std::filesystem::path public_key;
  std::filesystem::path secret_key;
  std::string fingerprint;
};

struct ProvisionReport {
  std::vector<ProvisionedKey> keys;
  std::filesystem::path config_path;
  std::map<std::string, std::string> measurements;
};

// Generates the quoting-authority pair and one signing pair per party of
// `app`, self-tests each, writes hex key files and config.json into
// out_dir, and records the expected measurement. Throws ConfigError or
// crypto::KeyFileError (existing files without `force`).
ProvisionReport provision(const std::filesystem::path& out_dir, const std::string& app, bool force,
                          const net::Endpoint& enclave_address = {"127.0.0.1", 7000});

std::string fingerprint(ByteView public_key);

}  // namespace sealed::runtime

#endif  // SEALED_RUNTIME_CONFIG_HPP
