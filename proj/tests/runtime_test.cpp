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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "sealed/apps/cleanroom.hpp"
#include "sealed/apps/password.hpp"
#include "sealed/channel/keys.hpp"
#include "sealed/error.hpp"
#include "sealed/runtime/config.hpp"
#include "sealed/runtime/host.hpp"
#include "support/temp_dir.hpp"

namespace sealed::runtime {
namespace {

using sealed::testing::TempDir;

TEST(ConfigTest, ParseDefaultsAndRoundTrip) {
  auto c = RunConfig::parse(R"({"app": "password-checker", "enclave_address": "10.0.0.1:9000",
      "authority": {"public_key": "a.pk", "secret_key": "a.sk"},
      "parties": {"Alice": {"public_key": "Alice.pk"}},
      "identities": {"client": "Alice"}, "readiness_threshold": 3})",
                            "/cfg");
  EXPECT_EQ(c.app, "password-checker");
  EXPECT_EQ(c.enclave_address.port, 9000);
  EXPECT_EQ(c.identity_for("client"), "Alice");
  EXPECT_EQ(c.identity_for("P1"), "P1");
  EXPECT_EQ(c.readiness_threshold, 3u);
  EXPECT_EQ(c.resolve("a.pk"), std::filesystem::path("/cfg/a.pk"));
  EXPECT_EQ(c.resolve("/abs/x"), std::filesystem::path("/abs/x"));
  EXPECT_EQ(c.providers.at("P1"), "P1");

  auto back = RunConfig::parse(c.to_json(), "/cfg");
  EXPECT_EQ(back.to_json(), c.to_json());
}

TEST(ConfigTest, RejectsBadInput) {
  EXPECT_THROW(RunConfig::parse("{", "."), ConfigError);
  EXPECT_THROW(RunConfig::parse("[]", "."), ConfigError);
  EXPECT_THROW(RunConfig::parse(R"({"enclave_address": "nope"})", "."), ConfigError);
  EXPECT_THROW(RunConfig::parse(R"({"readiness_threshold": -1})", "."), ConfigError);
  EXPECT_THROW(RunConfig::parse(R"({"parties": {"A": {}}})", "."), ConfigError);
  EXPECT_THROW(RunConfig::load("/nonexistent/config.json"), ConfigError);
  auto c = RunConfig::parse(R"({"expected_measurement": {"x": "abcd"}})", ".");
  EXPECT_THROW(c.measurement_for("x"), ConfigError);
  EXPECT_EQ(c.measurement_for("y"), std::nullopt);
}

TEST(ProvisionTest, CleanroomWritesEightKeyFiles) {
  TempDir dir;
  auto report = provision(dir.path(), "cleanroom", false);
  std::size_t key_files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir.path()))
    if (e.path().extension() == ".pk" || e.path().extension() == ".sk") ++key_files;
  EXPECT_EQ(key_files, 8u);
  ASSERT_EQ(report.keys.size(), 4u);

  auto cfg = RunConfig::load(report.config_path);
  for (const auto& party : {"P1", "P2", "C1"}) {
    auto kp = cfg.party_pair(party);
    auto sig = crypto::sign(kp.secret_key, as_bytes("probe"));
    EXPECT_TRUE(crypto::verify(kp.public_key, as_bytes("probe"), sig)) << party;
  }
  auto auth = cfg.authority_pair();
  EXPECT_TRUE(crypto::verify(auth.public_key, as_bytes("m"), crypto::sign(auth.secret_key, as_bytes("m"))));

  // The recorded measurement is what the enclave will compute.
  auto m = cfg.measurement_for("cleanroom");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, measure(make_builder(cfg, "cleanroom", "enclave", {}), cfg.credentials()));
}

TEST(ProvisionTest, RefusesToOverwriteWithoutForce) {
  TempDir dir;
  auto first = provision(dir.path(), "password-checker", false);
  EXPECT_THROW(provision(dir.path(), "password-checker", false), crypto::KeyFileError);
  auto second = provision(dir.path(), "password-checker", true);
  EXPECT_NE(first.keys[0].fingerprint, second.keys[0].fingerprint);
  EXPECT_THROW(provision(dir.path(), "nosuch", true), ConfigError);
}

TEST(MeasurementTest, DiffersAcrossAppsAndCredentials) {
  TempDir a, b;
  provision(a.path(), "cleanroom", false);
  provision(b.path(), "cleanroom", false);
  auto ca = RunConfig::load(a / "config.json");
  auto cb = RunConfig::load(b / "config.json");
  // Same program, different provisioned keys.
  EXPECT_NE(ca.measurement_for("cleanroom"), cb.measurement_for("cleanroom"));
}

// ---- end to end over TCP ----

struct PasswordDeployment {
  TempDir dir;
  RunConfig cfg;
  std::unique_ptr<EnclaveHost> host;

  explicit PasswordDeployment(SecurityOptions security = {}) {
    provision(dir.path(), "password-checker", false);
    cfg = RunConfig::load(dir / "config.json");
    EnclaveSetup setup;
    setup.security = security;
    setup.authority = cfg.authority_pair();
    setup.credentials = cfg.credentials();
    host = std::make_unique<EnclaveHost>(std::move(setup), make_builder(cfg, "password-checker", "enclave", {}));
    host->start();
    cfg.enclave_address = host->endpoint();
  }

  ClientSetup client(SecurityOptions security = {}) const {
    ClientSetup s;
    s.role = "client";
    s.enclave = cfg.enclave_address;
    s.security = security;
    s.identity = cfg.identity_for("client");
    s.signing_key = cfg.party_pair(s.identity).secret_key;
    s.authority_public = cfg.authority_public();
    s.expected_measurement = cfg.measurement_for("password-checker");
    s.credentials = cfg.credentials();
    return s;
  }

  std::string login(const std::string& guess, const ClientSetup& s) const {
    std::istringstream in(guess + "\n");
    std::ostringstream out;
    run_client_role(s, make_builder(cfg, "password-checker", "client", {&in, &out}));
    return out.str();
  }
};

TEST(PasswordEndToEndTest, AttestedLogin) {
  PasswordDeployment d;
  EXPECT_EQ(d.host->measurement(), *d.cfg.measurement_for("password-checker"));
  EXPECT_EQ(d.login("password", d.client()), "Enter your password:\nLogin returned True\n");
  EXPECT_EQ(d.login("hunter2", d.client()), "Enter your password:\nLogin returned False\n");
  auto st = d.host->monitor().stats();
  EXPECT_EQ(st.sessions, 2u);
  EXPECT_EQ(st.calls, 2u);
}

TEST(PasswordEndToEndTest, LocallyComputedMeasurementMatches) {
  PasswordDeployment d;
  auto s = d.client();
  s.expected_measurement.reset();
  EXPECT_EQ(d.login("password", s), "Enter your password:\nLogin returned True\n");
}

TEST(PasswordEndToEndTest, WrongMeasurementAbortsBeforeApplicationData) {
  PasswordDeployment d;
  auto s = d.client();
  (*s.expected_measurement)[0] ^= 0x80;
  try {
    d.login("password", s);
    FAIL();
  } catch (const AttestationFailure& e) {
    EXPECT_EQ(e.reason(), AttestationFailure::Reason::kMeasurementMismatch);
  }
  EXPECT_EQ(d.host->monitor().stats().calls, 0u);
  EXPECT_EQ(d.host->monitor().stats().sessions, 0u);
}

TEST(PasswordEndToEndTest, UnprovisionedIdentityRejected) {
  PasswordDeployment d;
  auto s = d.client();
  s.identity = "Mallory";
  EXPECT_THROW(d.login("password", s), AuthFailure);
  EXPECT_EQ(d.host->monitor().stats().calls, 0u);
}

TEST(PasswordEndToEndTest, PlainChannel) {
  SecurityOptions plain;
  plain.attestation = false;
  plain.client_auth = false;
  PasswordDeployment d(plain);
  EXPECT_EQ(d.login("password", d.client(plain)), "Enter your password:\nLogin returned True\n");
}

TEST(CleanroomEndToEndTest, ProvidersThenConsumerOverTcp) {
  TempDir dir;
  provision(dir.path(), "cleanroom", false);
  std::ofstream(dir / "p1.csv") << "alpha,30\ndelta,40\nalpha,50\n";
  std::ofstream(dir / "p2.csv") << "alpha,20\nomicron,60\n";
  auto cfg = RunConfig::load(dir / "config.json");

  EnclaveSetup setup;
  setup.authority = cfg.authority_pair();
  setup.credentials = cfg.credentials();
  EnclaveHost host(std::move(setup), make_builder(cfg, "cleanroom", "enclave", {}));
  host.start();
  cfg.enclave_address = host.endpoint();

  auto run = [&](const std::string& role) {
    ClientSetup s;
    s.role = role;
    s.enclave = cfg.enclave_address;
    s.identity = cfg.identity_for(role);
    s.signing_key = cfg.party_pair(s.identity).secret_key;
    s.authority_public = cfg.authority_public();
    s.expected_measurement = cfg.measurement_for("cleanroom");
    s.credentials = cfg.credentials();
    std::ostringstream out;
    run_client_role(s, make_builder(cfg, "cleanroom", role, {nullptr, &out}));
    return out.str();
  };
  EXPECT_EQ(run("P1"), "P1 sent 3 rows\n");
  EXPECT_EQ(run("P2"), "P2 sent 2 rows\n");
  EXPECT_EQ(run("C1"), "alpha\t33.3333\n");
}

}  // namespace
}  // namespace sealed::runtime
