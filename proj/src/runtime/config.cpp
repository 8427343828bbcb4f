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

#include "sealed/runtime/config.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "sealed/apps/cleanroom.hpp"
#include "sealed/apps/password.hpp"
#include "sealed/channel/keys.hpp"

namespace sealed::runtime {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

KeyPaths keys_from(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("public_key"))
    throw ConfigError(where + " needs a public_key path");
  KeyPaths k;
  k.public_key = j.at("public_key").get<std::string>();
  if (j.contains("secret_key")) k.secret_key = j.at("secret_key").get<std::string>();
  return k;
}

json keys_to(const KeyPaths& k) {
  json j{{"public_key", k.public_key.string()}};
  if (!k.secret_key.empty()) j["secret_key"] = k.secret_key.string();
  return j;
}

std::map<std::string, std::string> string_map(const json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field + " must be an object");
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : j.items()) m[k] = v.get<std::string>();
  return m;
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text, const fs::path& base_dir) {
  RunConfig c;
  c.base_dir = base_dir;
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (j.contains("app")) c.app = j["app"].get<std::string>();
    if (j.contains("enclave_address")) {
      try {
        c.enclave_address = net::Endpoint::parse(j["enclave_address"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("enclave_address: ") + e.what());
      }
    }
    if (j.contains("authority")) c.authority = keys_from(j["authority"], "authority");
    if (j.contains("parties")) {
      for (const auto& [name, keys] : j["parties"].items()) c.parties[name] = keys_from(keys, "party " + name);
    }
    if (j.contains("identities")) c.identities = string_map(j["identities"], "identities");
    if (j.contains("expected_measurement"))
      c.expected_measurement = string_map(j["expected_measurement"], "expected_measurement");
    if (j.contains("providers")) c.providers = string_map(j["providers"], "providers");
    if (j.contains("consumer")) c.consumer = j["consumer"].get<std::string>();
    if (j.contains("readiness_threshold")) {
      auto t = j["readiness_threshold"].get<std::int64_t>();
      if (t < 0) throw ConfigError("readiness_threshold must be non-negative");
      c.readiness_threshold = static_cast<std::size_t>(t);
    }
    if (j.contains("data_files")) {
      for (const auto& [role, path] : j["data_files"].items()) c.data_files[role] = path.get<std::string>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  return c;
}

RunConfig RunConfig::load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  fs::path base = path.parent_path();
  return parse(ss.str(), base.empty() ? fs::path(".") : base);
}

std::string RunConfig::to_json() const {
  json j;
  j["app"] = app;
  j["enclave_address"] = enclave_address.str();
  j["authority"] = keys_to(authority);
  json parties_j = json::object();
  for (const auto& [name, k] : parties) parties_j[name] = keys_to(k);
  j["parties"] = parties_j;
  j["identities"] = identities;
  j["expected_measurement"] = expected_measurement;
  j["providers"] = providers;
  j["consumer"] = consumer;
  j["readiness_threshold"] = readiness_threshold;
  json files = json::object();
  for (const auto& [role, p] : data_files) files[role] = p.string();
  j["data_files"] = files;
  return j.dump(2) + "\n";
}

void RunConfig::save(const fs::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << to_json();
}

fs::path RunConfig::resolve(const fs::path& p) const { return p.is_absolute() ? p : base_dir / p; }

std::string RunConfig::identity_for(const std::string& role) const {
  auto it = identities.find(role);
  return it == identities.end() ? role : it->second;
}

crypto::SignPublicKey RunConfig::authority_public() const {
  if (authority.public_key.empty()) throw ConfigError("no authority public key configured");
  return crypto::read_key<32>(resolve(authority.public_key));
}

crypto::SigningKeyPair RunConfig::authority_pair() const {
  if (authority.secret_key.empty()) throw ConfigError("no authority secret key configured");
  return {authority_public(), crypto::read_key<64>(resolve(authority.secret_key))};
}

crypto::SignPublicKey RunConfig::party_public(const std::string& party) const {
  auto it = parties.find(party);
  if (it == parties.end()) throw ConfigError("no keys configured for party " + party);
  return crypto::read_key<32>(resolve(it->second.public_key));
}

crypto::SigningKeyPair RunConfig::party_pair(const std::string& party) const {
  auto it = parties.find(party);
  if (it == parties.end()) throw ConfigError("no keys configured for party " + party);
  if (it->second.secret_key.empty()) throw ConfigError("no secret key configured for party " + party);
  return {party_public(party), crypto::read_key<64>(resolve(it->second.secret_key))};
}

channel::CredentialRegistry RunConfig::credentials() const {
  channel::CredentialRegistry r;
  for (const auto& [name, k] : parties) r.add(name, party_public(name));
  return r;
}

std::optional<channel::Measurement> RunConfig::measurement_for(const std::string& app_name) const {
  auto it = expected_measurement.find(app_name);
  if (it == expected_measurement.end()) return std::nullopt;
  Bytes b;
  try {
    b = from_hex(it->second);
  } catch (const std::invalid_argument&) {
    throw ConfigError("expected_measurement for " + app_name + " is not hex");
  }
  if (b.size() != 32) throw ConfigError("expected_measurement for " + app_name + " must be 32 bytes");
  channel::Measurement m;
  std::copy(b.begin(), b.end(), m.begin());
  return m;
}

AppBuilder make_builder(const RunConfig& cfg, const std::string& app, const std::string& role, ProgramIo io) {
  if (app == kPasswordApp) {
    std::istream* in = io.in ? io.in : &std::cin;
    std::ostream* out = io.out ? io.out : &std::cout;
    return [in, out](core::App& a) { apps::build_password_checker(a, *in, *out); };
  }
  if (app == kCleanroomApp) {
    auto principal = [&](std::string_view r) {
      auto it = cfg.providers.find(std::string(r));
      return it == cfg.providers.end() ? std::string(r) : it->second;
    };
    apps::CleanroomConfig cc;
    cc.provider1 = principal(apps::kProvider1Role);
    cc.provider2 = principal(apps::kProvider2Role);
    cc.consumer_key = crypto::kx_public_from_signing(cfg.party_public(cfg.consumer));
    cc.readiness_threshold = cfg.readiness_threshold;

    apps::CleanroomClients clients;
    for (const auto& [r, p] : cfg.data_files) clients.data_files[r] = cfg.resolve(p);
    if (role == apps::kConsumerRole) clients.consumer_keys = crypto::kx_from_signing(cfg.party_pair(cfg.identity_for(role)));
    clients.out = io.out ? io.out : &std::cout;
    return [cc, clients](core::App& a) { apps::build_cleanroom_app(a, cc, clients); };
  }
  throw ConfigError("unknown app: " + app);
}

std::vector<std::string> client_roles(const std::string& app) {
  if (app == kPasswordApp) return {std::string(apps::kPasswordClientRole)};
  if (app == kCleanroomApp)
    return {std::string(apps::kProvider1Role), std::string(apps::kProvider2Role), std::string(apps::kConsumerRole)};
  throw ConfigError("unknown app: " + app);
}

std::string fingerprint(ByteView public_key) { return to_hex(crypto::view(crypto::sha256(public_key))).substr(0, 16); }

ProvisionReport provision(const fs::path& out_dir, const std::string& app, bool force,
                          const net::Endpoint& enclave_address) {
  std::vector<std::string> parties;
  RunConfig cfg;
  cfg.app = app;
  cfg.enclave_address = enclave_address;
  if (app == kPasswordApp) {
    parties = {"Alice"};
    cfg.identities = {{std::string(apps::kPasswordClientRole), "Alice"}};
  } else if (app == kCleanroomApp) {
    parties = {"P1", "P2", "C1"};
    cfg.data_files = {{"P1", "p1.csv"}, {"P2", "p2.csv"}};
  } else {
    throw ConfigError("unknown app: " + app);
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw ConfigError("cannot create " + out_dir.string() + ": " + ec.message());
  fs::path config_path = out_dir / "config.json";
  if (!force && fs::exists(config_path)) throw crypto::KeyFileError("refusing to overwrite " + config_path.string());

  ProvisionReport report;
  auto make = [&](const std::string& name) {
    auto kp = crypto::SigningKeyPair::generate();
    static constexpr std::string_view kProbe = "sealed key self-test";
    if (!crypto::verify(kp.public_key, as_bytes(kProbe), crypto::sign(kp.secret_key, as_bytes(kProbe))))
      throw ConfigError("generated key for " + name + " failed its self-test");
    KeyPaths k{name + ".pk", name + ".sk"};
    crypto::write_key_file(out_dir / k.public_key, crypto::view(kp.public_key), force, false);
    crypto::write_key_file(out_dir / k.secret_key, crypto::view(kp.secret_key), force, true);
    report.keys.push_back({name, out_dir / k.public_key, out_dir / k.secret_key,
                           fingerprint(crypto::view(kp.public_key))});
    return k;
  };
  cfg.authority = make("authority");
  for (const auto& p : parties) cfg.parties[p] = make(p);

  cfg.base_dir = out_dir;
  channel::Measurement m = measure(make_builder(cfg, app, "enclave", {}), cfg.credentials());
  cfg.expected_measurement[app] = to_hex(crypto::view(m));
  report.measurements[app] = cfg.expected_measurement[app];

  cfg.save(config_path);
  report.config_path = config_path;
  return report;
}

}  // namespace sealed::runtime
