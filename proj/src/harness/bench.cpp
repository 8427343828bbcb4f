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

#include "sealed/harness/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include "sealed/apps/password.hpp"
#include "sealed/channel/transport.hpp"
#include "sealed/runtime/host.hpp"

namespace sealed::harness {

namespace {

struct Variant {
  std::string name;
  runtime::SecurityOptions security;
  std::unique_ptr<runtime::EnclaveHost> host;
  std::unique_ptr<core::CallTransport> transport;
  std::vector<double> samples;
  std::vector<Bytes> responses;
};

}  // namespace

BenchReport run_bench(const BenchOptions& opts) {
  if (opts.iterations == 0) throw std::invalid_argument("iterations must be at least 1");

  auto alice = crypto::SigningKeyPair::generate();
  auto authority = crypto::SigningKeyPair::generate();
  std::optional<apps::PasswordApi> api;
  auto build = [&api](core::App& app) { api = apps::register_password_checker(app); };

  auto security = [](bool ifc, bool ra, bool sig, bool per_call) {
    runtime::SecurityOptions s;
    s.enforce_ifc = ifc;
    s.attestation = ra;
    s.client_auth = sig;
    s.per_call_handshake = per_call;
    return s;
  };
  std::vector<Variant> variants;
  variants.push_back({"ifc_on", security(true, false, false, false), {}, {}, {}, {}});
  variants.push_back({"ifc_off", security(false, false, false, false), {}, {}, {}, {}});
  variants.push_back({"attestation_off", security(true, false, false, true), {}, {}, {}, {}});
  variants.push_back({"attestation_on", security(true, true, false, true), {}, {}, {}, {}});
  variants.push_back({"client_sig_off", security(true, true, false, true), {}, {}, {}, {}});
  variants.push_back({"client_sig_on", security(true, true, true, true), {}, {}, {}, {}});

  for (auto& v : variants) {
    runtime::EnclaveSetup setup;
    setup.security = v.security;
    setup.authority = authority;
    setup.credentials.add("Alice", alice.public_key);
    v.host = std::make_unique<runtime::EnclaveHost>(std::move(setup), build);
    v.host->start();

    channel::ChannelOptions o;
    o.endpoint = v.host->endpoint();
    o.attestation = v.security.attestation;
    o.per_call_handshake = v.security.per_call_handshake;
    o.handshake.name = "Alice";
    if (v.security.client_auth) o.handshake.signing_key = alice.secret_key;
    o.handshake.expected_measurement = v.host->measurement();
    o.handshake.quoting_authority = authority.public_key;
    v.transport = channel::make_transport_factory(o)();
  }

  auto ref = api->checkpwd.apply("password").ref();
  Bytes call = core::encode_call({ref.call_id(), ref.args()});

  for (std::size_t i = 0; i < opts.warmup; ++i)
    for (auto& v : variants) v.transport->roundtrip(call);

  using clock = std::chrono::steady_clock;
  for (std::size_t i = 0; i < opts.iterations; ++i) {
    for (auto& v : variants) {
      auto t0 = clock::now();
      Bytes r = v.transport->roundtrip(call);
      auto t1 = clock::now();
      v.samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      v.responses.push_back(std::move(r));
    }
  }

  BenchReport report;
  for (auto& v : variants) {
    double sum = 0;
    for (double s : v.samples) sum += s;
    double mean = sum / static_cast<double>(v.samples.size());
    double sq = 0;
    for (double s : v.samples) sq += (s - mean) * (s - mean);
    double sd = v.samples.size() > 1 ? std::sqrt(sq / static_cast<double>(v.samples.size() - 1)) : 0.0;
    report.rows.push_back({v.name, mean, sd, v.samples.size()});
  }
  report.ifc_payloads_identical = variants[0].responses == variants[1].responses;
  for (auto& v : variants) v.host->stop();
  return report;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "config,mean_ms,stddev_ms,samples\n";
  for (const auto& r : rows) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%.4f,%.4f,%zu\n", r.config.c_str(), r.mean_ms, r.stddev_ms, r.samples);
    out += buf;
  }
  return out;
}

}  // namespace sealed::harness
