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

// Command-line entry point: provisioning, the enclave and client roles, the
// benchmark and the attack suite.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "sealed/channel/keys.hpp"
#include "sealed/error.hpp"
#include "sealed/harness/attack.hpp"
#include "sealed/harness/bench.hpp"
#include "sealed/runtime/config.hpp"
#include "sealed/runtime/host.hpp"

namespace {

using namespace sealed;

enum Exit : int {
  kOk = 0,
  kOther = 1,
  kUsage = 2,
  kAttestation = 3,
  kAuth = 4,
  kIfc = 5,
  kTransport = 6,
};

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop = true; }

struct Flags {
  std::string role;
  std::string app;
  std::string config = "config.json";
  std::size_t iterations = 50;
  bool no_ifc = false;
  bool no_attestation = false;
  bool no_client_sig = false;
  bool per_call_handshake = false;
  std::string out = "keys";
  std::string address = "127.0.0.1:7000";
  bool force = false;
};

runtime::SecurityOptions security_of(const Flags& f) {
  runtime::SecurityOptions s;
  s.enforce_ifc = !f.no_ifc;
  s.attestation = !f.no_attestation;
  s.client_auth = !f.no_client_sig;
  s.per_call_handshake = f.per_call_handshake;
  runtime::validate(s);
  return s;
}

int cmd_provision(const Flags& f) {
  std::string app = f.app.empty() ? std::string(runtime::kCleanroomApp) : f.app;
  auto report = runtime::provision(f.out, app, f.force, net::Endpoint::parse(f.address));
  for (const auto& k : report.keys)
    std::cout << k.party << "\t" << k.fingerprint << "\t" << k.public_key.string() << "\n";
  for (const auto& [a, m] : report.measurements) std::cout << "measurement " << a << "\t" << m << "\n";
  std::cout << "wrote " << report.keys.size() * 2 << " key files and " << report.config_path.string() << "\n";
  return kOk;
}

int cmd_enclave(const Flags& f) {
  if (!f.role.empty() && f.role != core::kEnclaveRole) throw UsageError("the enclave subcommand runs role 'enclave'");
  auto cfg = runtime::RunConfig::load(f.config);
  std::string app = f.app.empty() ? cfg.app : f.app;

  runtime::EnclaveSetup setup;
  setup.listen = cfg.enclave_address;
  setup.security = security_of(f);
  if (setup.security.attestation) setup.authority = cfg.authority_pair();
  setup.credentials = cfg.credentials();
  runtime::EnclaveHost host(std::move(setup), runtime::make_builder(cfg, app, "enclave", {}));

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "enclave serving " << app << " on " << host.endpoint().str() << "\n"
            << "measurement " << to_hex(crypto::view(host.measurement())) << std::endl;
  auto expected = cfg.measurement_for(app);
  if (expected && *expected != host.measurement())
    std::cerr << "warning: measurement differs from expected_measurement in " << f.config << std::endl;
  host.start();
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(50));
  host.stop();
  auto st = host.monitor().stats();
  std::cerr << "served " << st.calls << " calls over " << st.connections << " connections; rejected "
            << st.auth_failures << " unauthenticated, " << st.gate_rejections + st.guard_rejections
            << " by IFC" << std::endl;
  return kOk;
}

int cmd_client(const Flags& f) {
  if (f.role.empty()) throw UsageError("--role is required");
  auto cfg = runtime::RunConfig::load(f.config);
  std::string app = f.app.empty() ? cfg.app : f.app;
  auto roles = runtime::client_roles(app);
  if (std::find(roles.begin(), roles.end(), f.role) == roles.end())
    throw UsageError("role '" + f.role + "' is not a client role of " + app);

  runtime::ClientSetup setup;
  setup.role = f.role;
  setup.enclave = cfg.enclave_address;
  setup.security = security_of(f);
  setup.identity = cfg.identity_for(f.role);
  if (setup.security.client_auth) setup.signing_key = cfg.party_pair(setup.identity).secret_key;
  if (setup.security.attestation) setup.authority_public = cfg.authority_public();
  setup.expected_measurement = cfg.measurement_for(app);
  setup.credentials = cfg.credentials();
  runtime::run_client_role(setup, runtime::make_builder(cfg, app, f.role, {&std::cin, &std::cout}));
  return kOk;
}

int cmd_bench(const Flags& f) {
  if (f.iterations < 1) throw UsageError("--iterations must be at least 1");
  harness::BenchOptions o;
  o.iterations = f.iterations;
  auto report = harness::run_bench(o);
  std::cout << harness::bench_csv(report.rows) << std::flush;
  std::cerr << "ifc_on/ifc_off payloads identical: " << (report.ifc_payloads_identical ? "yes" : "no") << std::endl;
  return report.ifc_payloads_identical ? kOk : kOther;
}

int cmd_attack(const Flags& f) {
  harness::AttackOptions o;
  o.client_auth = !f.no_client_sig;
  auto results = harness::run_attack_suite(o);
  std::size_t blocked = 0;
  for (const auto& r : results) {
    blocked += r.blocked;
    std::cout << (r.blocked ? "PASS" : "FAIL") << " (" << r.id << ") " << r.scenario << ": " << r.detail << "\n";
  }
  std::cout << blocked << "/" << results.size() << " attacks blocked" << std::endl;
  return blocked == results.size() ? kOk : kOther;
}

int exit_for_remote(const RemoteError& e) {
  switch (e.code()) {
    case ErrorCode::kIfcViolation: return kIfc;
    case ErrorCode::kAuthFailure: return kAuth;
    default: return kOther;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Tierless enclave programs with information-flow control"};
  cli.require_subcommand(1);
  Flags f;

  auto* prov = cli.add_subcommand("provision", "Generate key files and a config");
  prov->add_option("--app", f.app, "password-checker or cleanroom (default cleanroom)");
  prov->add_option("--out", f.out, "Output directory")->capture_default_str();
  prov->add_option("--address", f.address, "Enclave address to record")->capture_default_str();
  prov->add_flag("--force", f.force, "Overwrite existing files");

  auto* enc = cli.add_subcommand("enclave", "Run the enclave role");
  auto* cl = cli.add_subcommand("client", "Run a client role");
  for (auto* sc : {enc, cl}) {
    sc->add_option("--role", f.role, "Role to play");
    sc->add_option("--app", f.app, "Program (default: from config)");
    sc->add_option("--config", f.config, "Config file")->capture_default_str();
    sc->add_flag("--no-attestation", f.no_attestation, "Plain TCP, no handshake");
    sc->add_flag("--no-client-sig", f.no_client_sig, "Skip client signatures");
  }
  enc->add_flag("--no-ifc", f.no_ifc, "Disable IFC guards");
  cl->add_flag("--per-call-handshake", f.per_call_handshake, "New session for every call");

  auto* bench = cli.add_subcommand("bench", "Latency of gateway calls per configuration (CSV)");
  bench->add_option("--iterations", f.iterations, "Calls per configuration")->capture_default_str();

  auto* attack = cli.add_subcommand("attack", "Run the attack scenarios against an in-process enclave");
  attack->add_flag("--no-client-sig", f.no_client_sig, "Control run: enclave skips client signatures");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = cli.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*prov) return cmd_provision(f);
    if (*enc) return cmd_enclave(f);
    if (*cl) return cmd_client(f);
    if (*bench) return cmd_bench(f);
    if (*attack) return cmd_attack(f);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return kUsage;
  } catch (const AttestationFailure& e) {
    std::cerr << "attestation failed: " << e.what() << std::endl;
    return kAttestation;
  } catch (const AuthFailure& e) {
    std::cerr << "authentication failed: " << e.what() << std::endl;
    return kAuth;
  } catch (const IfcViolation& e) {
    std::cerr << e.what() << std::endl;
    return kIfc;
  } catch (const RemoteError& e) {
    std::cerr << "enclave returned " << error_code_name(e.code()) << ": " << e.what() << std::endl;
    return exit_for_remote(e);
  } catch (const TransportError& e) {
    std::cerr << "transport error: " << e.what() << std::endl;
    return kTransport;
  } catch (const SessionError& e) {
    std::cerr << "session error: " << e.what() << std::endl;
    return kTransport;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kOther;
  }
  return kOther;
}
