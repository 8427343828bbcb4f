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

#ifndef SEALED_APPS_CLEANROOM_HPP
#define SEALED_APPS_CLEANROOM_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sealed/channel/crypto.hpp"
#include "sealed/core/app.hpp"

namespace sealed::apps {

inline constexpr std::string_view kProvider1Role = "P1";
inline constexpr std::string_view kProvider2Role = "P2";
inline constexpr std::string_view kConsumerRole = "C1";
inline constexpr std::int64_t kMaxAge = 150;

struct Row {
  std::string strain;
  std::int64_t age = 0;

  friend bool operator==(const Row&, const Row&) = default;
};

// Throws DecodeError for an empty strain or an age outside [0, kMaxAge].
void validate_row(const Row& r);

// One `strain,age` row per line; blank lines are skipped. Throws
// std::runtime_error naming the offending line.
std::vector<Row> parse_rows(std::istream& in);
std::vector<Row> read_rows(const std::filesystem::path& path);

// <{{p}}, {{p}}>
label::DCLabel provider_label(const std::string& principal);

// The sole principal of a single-clause, single-principal secrecy CNF.
std::optional<std::string> extract_provider(const label::DCLabel& l);

struct ProviderPrivileges {
  std::string name1;
  label::Privilege priv1;
  std::string name2;
  label::Privilege priv2;
};

// Unlabels with the matching provider's privilege; anything else is
// unlabeled without privilege and taints the context. `provider` receives
// the recognized provider name, or stays empty.
Row unlabel_row(ifc::IfcContext& ctx, const ProviderPrivileges& privs, const ifc::LabeledValue& row,
                std::string* provider = nullptr);

struct StrainMean {
  std::string strain;
  double mean = 0;

  friend bool operator==(const StrainMean&, const StrainMean&) = default;
};

// Strains seen in at least one row of each provider, with the mean age over
// all of their rows, sorted by strain. Rows from other providers are ignored.
std::vector<StrainMean> psi_mean_age(const std::vector<std::pair<std::string, Row>>& rows,
                                     const std::string& provider1, const std::string& provider2);

// `strain<TAB>mean` lines, mean to four decimals.
std::string format_result(const std::vector<StrainMean>& result);

core::Value result_to_value(const std::vector<StrainMean>& result);
std::vector<StrainMean> result_from_value(const core::Value& v);

// Envelope = ephemeral X25519 public key ‖ ChaCha20-Poly1305 ciphertext.
Bytes encrypt_result(const crypto::KxPublicKey& recipient, ByteView plaintext);
std::optional<Bytes> decrypt_result(const crypto::KxKeyPair& recipient, ByteView envelope);

struct CleanroomConfig {
  std::string provider1 = "P1";
  std::string provider2 = "P2";
  crypto::KxPublicKey consumer_key{};
  // Rows each provider must have uploaded before a query is answered. Zero
  // disables the check.
  std::size_t readiness_threshold = 1;

  Bytes encode() const;
};

struct CleanroomApi {
  core::Secure<void(ifc::LabeledValue)> datasend;
  core::Secure<Bytes()> run_query;
  core::RefHandle database;
};

// Registers the database, datasend (CallId 0) and run_query (CallId 1) and
// provisions the configuration.
CleanroomApi register_cleanroom(core::App& app, const CleanroomConfig& cfg);

struct CleanroomClients {
  // Provider role -> data file.
  std::map<std::string, std::filesystem::path> data_files;
  // The consumer's key pair, needed only in the consumer role.
  std::optional<crypto::KxKeyPair> consumer_keys;
  std::ostream* out = nullptr;
};

// The whole program, with bodies for P1, P2 and C1.
void build_cleanroom_app(core::App& app, const CleanroomConfig& cfg, const CleanroomClients& clients);

}  // namespace sealed::apps

namespace sealed::core {

template <>
struct ValueTraits<apps::Row> {
  static Value to_value(const apps::Row& r) { return Value::list({Value::string(r.strain), Value::integer(r.age)}); }
  static apps::Row from_value(const Value& v) {
    const auto& l = v.as_list();
    if (l.size() != 2) throw DecodeError("type mismatch: row needs two fields");
    apps::Row r{l[0].as_string(), l[1].as_int()};
    apps::validate_row(r);
    return r;
  }
};

}  // namespace sealed::core

#endif  // SEALED_APPS_CLEANROOM_HPP
