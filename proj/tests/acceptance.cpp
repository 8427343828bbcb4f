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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "sealed/apps/cleanroom.hpp"
#include "sealed/apps/password.hpp"
#include "sealed/core/message.hpp"
#include "sealed/error.hpp"
#include "sealed/harness/attack.hpp"
#include "sealed/harness/bench.hpp"
#include "sealed/harness/mitm.hpp"
#include "sealed/runtime/config.hpp"
#include "sealed/runtime/host.hpp"
#include "support/cleanroom_oracle.hpp"
#include "support/label_oracle.hpp"
#include "support/temp_dir.hpp"
#include "support/value_gen.hpp"

namespace {

using namespace sealed;
using Clock = std::chrono::steady_clock;
using sealed::testing::OracleRow;

const std::string kPasswordApp(runtime::kPasswordApp);
const std::string kCleanroomApp(runtime::kCleanroomApp);

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// ---- 1 ----
void cnf_oracle(Verdict& v) {
  auto t0 = Clock::now();
  std::size_t pairs = 0, mismatches = 0;
  auto names3 = sealed::testing::principal_names(3);
  auto u3 = sealed::testing::all_cnfs(names3);
  for (const auto& a : u3)
    for (const auto& b : u3) {
      ++pairs;
      if (label::cnf_implies(a, b) != sealed::testing::oracle_implies(a, b, names3)) ++mismatches;
    }
  std::size_t exhaustive3 = pairs;

  auto names4 = sealed::testing::principal_names(4);
  auto u4 = sealed::testing::all_cnfs(names4);
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<std::size_t> pick(0, u4.size() - 1);
  for (int i = 0; i < 10000; ++i) {
    const auto& a = u4[pick(rng)];
    const auto& b = u4[pick(rng)];
    ++pairs;
    if (label::cnf_implies(a, b) != sealed::testing::oracle_implies(a, b, names4)) ++mismatches;
  }
  // Plus random unreduced clause sets, reduced by the library.
  for (int i = 0; i < 10000; ++i) {
    auto a = sealed::testing::random_cnf(rng, names4);
    auto b = sealed::testing::random_cnf(rng, names4);
    ++pairs;
    if (label::cnf_implies(a, b) != sealed::testing::oracle_implies(a, b, names4)) ++mismatches;
  }
  double secs = seconds_since(t0);
  v.check(u3.size() == 20 && u4.size() == 168, "canonical universe sizes");
  v.check(mismatches == 0, std::to_string(mismatches) + " mismatches");
  v.check(secs < 60, "runtime over 60 s");
  v.note << exhaustive3 << " exhaustive 3-principal pairs, " << pairs - exhaustive3
         << " random 4-principal pairs, " << mismatches << " mismatches, " << secs << " s";
}

// ---- 2 ----
void lattice_laws(Verdict& v) {
  auto names = sealed::testing::principal_names(2);
  auto u = sealed::testing::all_labels(names);
  using label::can_flow_to;
  std::size_t bad = 0;
  for (const auto& a : u) {
    if (!can_flow_to(a, a)) ++bad;
    for (const auto& b : u) {
      bool ab = can_flow_to(a, b), ba = can_flow_to(b, a);
      if (ab != sealed::testing::oracle_flow(a, b, names)) ++bad;
      if (ab && ba && !(a == b)) ++bad;
      auto j = label::join(a, b), m = label::meet(a, b);
      if (!can_flow_to(a, j) || !can_flow_to(b, j)) ++bad;
      if (!can_flow_to(m, a) || !can_flow_to(m, b)) ++bad;
      for (const auto& c : u) {
        if (ab && can_flow_to(b, c) && !can_flow_to(a, c)) ++bad;
        if (can_flow_to(a, c) && can_flow_to(b, c) && !can_flow_to(j, c)) ++bad;
        if (can_flow_to(c, a) && can_flow_to(c, b) && !can_flow_to(c, m)) ++bad;
      }
    }
  }
  v.check(u.size() == 36, "label universe size");
  v.check(bad == 0, std::to_string(bad) + " counterexamples");
  v.note << u.size() << " labels, " << u.size() * u.size() * u.size() << " triples, " << bad << " counterexamples";
}

// ---- 3 ----
void downgrade_law(Verdict& v) {
  auto names = sealed::testing::principal_names(2);
  auto u = sealed::testing::all_labels(names);
  auto privs = sealed::testing::all_cnfs(names);
  std::size_t bad = 0, cases = 0;
  for (const auto& pc : privs) {
    label::Privilege p(pc);
    for (const auto& l1 : u) {
      auto d = label::downgrade(p, l1);
      for (const auto& l2 : u) {
        ++cases;
        bool lhs = label::can_flow_to_p(p, l1, l2);
        if (lhs != label::can_flow_to(d, l2)) ++bad;
        if (lhs != sealed::testing::oracle_flow_p(p, l1, l2, names)) ++bad;
      }
    }
  }
  v.check(bad == 0, std::to_string(bad) + " counterexamples");
  v.note << cases << " (privilege, l1, l2) cases, " << bad << " counterexamples";
}

// ---- 4 ----
void password_end_to_end(Verdict& v) {
  auto t0 = Clock::now();
  sealed::testing::TempDir dir("acceptance");
  runtime::provision(dir.path(), kPasswordApp, false);
  auto cfg = runtime::RunConfig::load(dir / "config.json");

  runtime::EnclaveSetup setup;
  setup.authority = cfg.authority_pair();
  setup.credentials = cfg.credentials();
  runtime::EnclaveHost host(std::move(setup), runtime::make_builder(cfg, kPasswordApp, "enclave", {}));
  host.start();

  auto client = [&](const net::Endpoint& ep) {
    runtime::ClientSetup s;
    s.role = apps::kPasswordClientRole;
    s.enclave = ep;
    s.identity = cfg.identity_for(s.role);
    s.signing_key = cfg.party_pair(s.identity).secret_key;
    s.authority_public = cfg.authority_public();
    s.expected_measurement = cfg.measurement_for(kPasswordApp);
    s.credentials = cfg.credentials();
    return s;
  };
  auto login = [&](const std::string& guess, const runtime::ClientSetup& s) {
    std::istringstream in(guess + "\n");
    std::ostringstream out;
    runtime::run_client_role(s, runtime::make_builder(cfg, kPasswordApp, s.role, {&in, &out}));
    return out.str();
  };

  const auto base = client(host.endpoint());
  v.check(base.security.attestation && base.security.client_auth, "security defaults");
  v.check(login("password", base) == "Enter your password:\nLogin returned True\n", "right guess");
  for (std::string g : {"hunter2", "", "Password", "password "})
    v.check(login(g, base) == "Enter your password:\nLogin returned False\n", "wrong guess '" + g + "'");
  auto calls_before = host.monitor().stats().calls;

  // Wrong expected measurement, observed from the wire.
  harness::Mitm tap(host.endpoint());
  auto wrong = client(tap.endpoint());
  (*wrong.expected_measurement)[5] ^= 0x01;
  bool aborted = false;
  try {
    login("password", wrong);
  } catch (const AttestationFailure& e) {
    aborted = e.reason() == AttestationFailure::Reason::kMeasurementMismatch;
  }
  std::this_thread::sleep_for(std::chrono::milliseconds(50));
  std::size_t to_enclave = 0, app_frames = 0;
  for (const auto& f : tap.transcript()) {
    if (f.direction != harness::Direction::kToEnclave) continue;
    ++to_enclave;
    if (!f.frame.empty() && f.frame[0] != 0x10) ++app_frames;
  }
  v.check(aborted, "client did not abort on wrong measurement");
  v.check(to_enclave == 1 && app_frames == 0, "client sent frames past the hello");
  v.check(host.monitor().stats().calls == calls_before, "call dispatched after abort");
  host.stop();
  double secs = seconds_since(t0);
  v.check(secs < 5, "over 5 s");
  v.note << "5 logins over attested TCP, wrong measurement aborted after " << to_enclave << " frame(s) out, "
         << secs << " s";
}

// ---- 5 ----
void attack_suite(Verdict& v) {
  auto results = harness::run_attack_suite();
  std::size_t blocked = 0;
  for (const auto& r : results) {
    if (r.blocked) ++blocked;
    v.check(r.blocked, "(" + r.id + ") " + r.detail);
  }
  v.check(results.size() == 4, "scenario count");

  // The leaky function, dispatched directly: must die at the gate.
  core::App app(core::RoleId::enclave());
  apps::PasswordOptions po;
  po.with_leak = true;
  auto api = apps::register_password_checker(app, po);
  app.freeze();
  bool gate = true;
  for (std::string guess : {"password", "nope"}) {
    auto ref = api.leakpwd->apply(guess).ref();
    auto out = app.dispatch_table().dispatch(ref.call_id(), ref.args());
    auto r = core::decode_response(out.response);
    auto* err = std::get_if<core::ResultError>(&r);
    gate = gate && out.rejection == core::Rejection::kOutputGate && err &&
           err->code == ErrorCode::kIfcViolation && err->message == kIfcViolationMessage;
  }
  v.check(gate, "leaky function not rejected at the output gate with the fixed string");
  v.note << blocked << "/" << results.size() << " blocked";
  for (const auto& r : results) v.note << "; (" << r.id << ") " << r.detail;
}

// ---- 6, 7 ----
class Cleanroom {
 public:
  explicit Cleanroom(const crypto::KxPublicKey& consumer) {
    app_ = std::make_unique<core::App>(core::RoleId::enclave());
    apps::CleanroomConfig cfg;
    cfg.consumer_key = consumer;
    api_.emplace(apps::register_cleanroom(*app_, cfg));
    app_->freeze();
  }

  bool send(const label::DCLabel& l, const OracleRow& r) {
    auto ref = api_->datasend.apply(ifc::LabeledValue{l, core::encode_value(core::to_value(apps::Row{r.strain, r.age}))}).ref();
    return app_->dispatch_table().dispatch(ref.call_id(), ref.args()).rejection == core::Rejection::kNone;
  }

  bool upload(const std::vector<OracleRow>& p1, const std::vector<OracleRow>& p2) {
    bool ok = true;
    for (const auto& r : p1) ok = send(apps::provider_label("P1"), r) && ok;
    for (const auto& r : p2) ok = send(apps::provider_label("P2"), r) && ok;
    return ok;
  }

  core::DispatchOutcome query() { return app_->dispatch_table().dispatch(api_->run_query.ref().call_id(), {}); }

 private:
  std::unique_ptr<core::App> app_;
  std::optional<apps::CleanroomApi> api_;
};

std::optional<std::vector<apps::StrainMean>> open_result(const core::DispatchOutcome& out, const crypto::KxKeyPair& keys) {
  auto r = core::decode_response(out.response);
  if (!std::holds_alternative<core::Value>(r)) return std::nullopt;
  auto plain = apps::decrypt_result(keys, std::get<core::Value>(r).as_bytes());
  if (!plain) return std::nullopt;
  return apps::result_from_value(core::decode_value(*plain));
}

const std::vector<OracleRow> kP1 = {{"alpha", 30}, {"delta", 40}, {"alpha", 50}};
const std::vector<OracleRow> kP2 = {{"alpha", 20}, {"omicron", 60}};

void cleanroom_correctness(Verdict& v) {
  auto c1_kx = crypto::kx_from_signing(crypto::SigningKeyPair::generate());
  auto p1_kx = crypto::kx_from_signing(crypto::SigningKeyPair::generate());

  {
    Cleanroom room(c1_kx.public_key);
    v.check(room.upload(kP1, kP2), "reference upload");
    auto out = room.query();
    auto got = open_result(out, c1_kx);
    v.check(got && got->size() == 1 && (*got)[0].strain == "alpha" &&
                std::abs((*got)[0].mean - 100.0 / 3.0) <= 1e-9,
            "reference result");
    if (got) v.check(apps::format_result(*got) == "alpha\t33.3333\n", "formatted reference result");
    v.check(!open_result(out, p1_kx).has_value(), "P1 decrypted the envelope");
  }

  std::mt19937 rng(6);
  std::size_t agree = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto r1 = sealed::testing::random_rows(rng, sealed::testing::strain_pool());
    auto r2 = sealed::testing::random_rows(rng, sealed::testing::strain_pool());
    Cleanroom room(c1_kx.public_key);
    room.upload(r1, r2);
    auto got = open_result(room.query(), c1_kx);
    auto want = sealed::testing::oracle_psi_mean(r1, r2);
    bool same = got && got->size() == want.size();
    for (std::size_t i = 0; same && i < want.size(); ++i)
      same = (*got)[i].strain == want[i].first && std::abs((*got)[i].mean - want[i].second) <= 1e-9;
    if (same) ++agree;
  }
  v.check(agree == 100, std::to_string(100 - agree) + " random datasets disagree");

  // The whole program over TCP: providers upload, P1 queries, then C1 does.
  sealed::testing::TempDir dir("acceptance");
  runtime::provision(dir.path(), kCleanroomApp, false);
  std::ofstream(dir / "p1.csv") << "alpha,30\ndelta,40\nalpha,50\n";
  std::ofstream(dir / "p2.csv") << "alpha,20\nomicron,60\n";
  auto cfg = runtime::RunConfig::load(dir / "config.json");
  runtime::EnclaveSetup setup;
  setup.authority = cfg.authority_pair();
  setup.credentials = cfg.credentials();
  runtime::EnclaveHost host(std::move(setup), runtime::make_builder(cfg, kCleanroomApp, "enclave", {}));
  host.start();
  cfg.enclave_address = host.endpoint();
  auto setup_for = [&](const std::string& role) {
    runtime::ClientSetup s;
    s.role = role;
    s.enclave = cfg.enclave_address;
    s.identity = cfg.identity_for(role);
    s.signing_key = cfg.party_pair(s.identity).secret_key;
    s.authority_public = cfg.authority_public();
    s.expected_measurement = cfg.measurement_for(kCleanroomApp);
    s.credentials = cfg.credentials();
    return s;
  };
  auto run = [&](const std::string& role) {
    std::ostringstream out;
    runtime::run_client_role(setup_for(role), runtime::make_builder(cfg, kCleanroomApp, role, {nullptr, &out}));
    return out.str();
  };
  v.check(run("P1") == "P1 sent 3 rows\n", "P1 upload over TCP");
  v.check(run("P2") == "P2 sent 2 rows\n", "P2 upload over TCP");

  // P1 issues runQuery itself with a hand-built program.
  bool p1_failed = false;
  runtime::run_client_role(setup_for("P1"), [&](core::App& app) {
    std::optional<apps::CleanroomApi> api;
    apps::CleanroomConfig ccfg;
    ccfg.provider1 = cfg.providers.at("P1");
    ccfg.provider2 = cfg.providers.at("P2");
    ccfg.consumer_key = crypto::kx_public_from_signing(cfg.party_public(cfg.consumer));
    ccfg.readiness_threshold = cfg.readiness_threshold;
    api.emplace(apps::register_cleanroom(app, ccfg));
    app.run_client("P1", [&](core::Client& c) {
      Bytes env = c.gateway(api->run_query.ref()).as_bytes();
      p1_failed = !apps::decrypt_result(crypto::kx_from_signing(cfg.party_pair("P1")), env).has_value();
    });
    for (std::string r : {"P2", "C1"}) app.run_client(r, [](core::Client&) {});
  });
  v.check(p1_failed, "P1 decrypted the networked envelope");
  v.check(run("C1") == "alpha\t33.3333\n", "C1 output over TCP");
  v.note << "reference dataset exact, " << agree << "/100 random datasets match, P1 decryption fails";
}

void float_up(Verdict& v) {
  Cleanroom room(crypto::kx_from_signing(crypto::SigningKeyPair::generate()).public_key);
  room.upload(kP1, kP2);
  label::DCLabel joint{label::cnf_and(label::cnf_from_principal("P1"), label::cnf_from_principal("P2")),
                       label::Cnf::truth()};
  v.check(room.send(joint, {"alpha", 99}), "injected row accepted by datasend");
  auto out = room.query();
  auto r = core::decode_response(out.response);
  auto* err = std::get_if<core::ResultError>(&r);
  v.check(err && err->code == ErrorCode::kIfcViolation && err->message == kIfcViolationMessage,
          "runQuery did not return IFC_VIOLATION");
  v.check(out.rejection == core::Rejection::kOutputGate, "not rejected at the output gate");
  v.note << "runQuery -> " << (err ? std::string(error_code_name(err->code)) + " \"" + err->message + "\"" : "RESULT_OK");
}

// ---- 8 ----
void bench_shape(Verdict& v) {
  harness::BenchOptions o;
  o.iterations = 50;
  auto report = harness::run_bench(o);
  auto mean = [&](const std::string& name) {
    for (const auto& r : report.rows)
      if (r.config == name) return r.mean_ms;
    return std::nan("");
  };
  std::string csv = harness::bench_csv(report.rows);
  std::istringstream lines(csv);
  std::string line;
  bool four_columns = true;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    ++n;
    four_columns = four_columns && std::count(line.begin(), line.end(), ',') == 3;
  }
  for (const auto& r : report.rows) v.check(r.samples == 50, r.config + " sample count");
  v.check(mean("attestation_on") > mean("attestation_off"), "attestation_on not slower than attestation_off");
  v.check(mean("client_sig_on") >= mean("client_sig_off"), "client_sig_on faster than client_sig_off");
  v.check(report.ifc_payloads_identical, "IFC on/off payloads differ");
  v.check(four_columns && n == report.rows.size() + 1, "CSV shape");
  v.note << "attestation on/off " << mean("attestation_on") << "/" << mean("attestation_off") << " ms, client sig on/off "
         << mean("client_sig_on") << "/" << mean("client_sig_off") << " ms, ifc on/off " << mean("ifc_on") << "/"
         << mean("ifc_off") << " ms";
  std::cout << csv;
}

// ---- 9 ----
void codec(Verdict& v) {
  sealed::testing::ValueGen gen(9);
  std::size_t mismatches = 0, tags_seen = 0;
  bool seen[9] = {};
  std::function<void(const core::Value&)> mark = [&](const core::Value& x) {
    Bytes b = core::encode_value(x);
    seen[b[0]] = true;
    if (x.tag() == core::Tag::kList)
      for (const auto& e : x.as_list()) mark(e);
  };
  std::vector<Bytes> corpus;
  for (int i = 0; i < 10000; ++i) {
    core::Value x = gen.value();
    Bytes b = core::encode_value(x);
    mark(x);
    try {
      core::Value back = core::decode_value(b);
      if (!(back == x) || core::encode_value(back) != b) ++mismatches;
    } catch (const std::exception&) {
      ++mismatches;
    }
    if (corpus.size() < 300) corpus.push_back(std::move(b));
  }
  for (int t = 1; t <= 8; ++t) tags_seen += seen[t];

  // Inputs that cannot be valid: every strict prefix, trailing junk, deep
  // nesting, bad tags and bad UTF-8. Each goes in as a call argument.
  std::vector<Bytes> malformed = {{}, {0x00}, {0x09}, {0xff}, {0x02, 0x02}, {0x05, 0, 0, 0, 1, 0xc0}, {0x06, 0xff, 0xff, 0xff, 0xff}};
  for (const auto& b : corpus) {
    for (std::size_t cut = 0; cut < b.size(); ++cut) malformed.emplace_back(b.begin(), b.begin() + cut);
    Bytes extra = b;
    extra.push_back(0x01);
    malformed.push_back(std::move(extra));
  }
  Bytes deep;
  for (int i = 0; i < 80; ++i) deep.insert(deep.end(), {0x06, 0, 0, 0, 1});
  deep.push_back(0x01);
  malformed.push_back(deep);

  core::App app(core::RoleId::enclave());
  auto api = apps::register_password_checker(app, {});
  app.freeze();
  std::size_t not_decode = 0;
  for (const auto& m : malformed) {
    auto out = app.dispatch_table().handle(core::encode_call({api.checkpwd.ref().call_id(), {m}}));
    auto r = core::decode_response(out.response);
    auto* err = std::get_if<core::ResultError>(&r);
    if (!err || err->code != ErrorCode::kDecodeError) ++not_decode;
  }
  // Truncated call messages themselves.
  Bytes call = core::encode_call({api.checkpwd.apply("password").ref().call_id(), api.checkpwd.apply("password").ref().args()});
  for (std::size_t cut = 0; cut < call.size(); ++cut) {
    auto out = app.dispatch_table().handle(ByteView(call.data(), cut));
    auto r = core::decode_response(out.response);
    auto* err = std::get_if<core::ResultError>(&r);
    if (!err || err->code != ErrorCode::kDecodeError) ++not_decode;
  }

  // Random mutation: decode either succeeds or throws DecodeError.
  std::mt19937_64 rng(99);
  std::size_t other_errors = 0, mutated = 0;
  for (const auto& b : corpus) {
    for (int k = 0; k < 20; ++k) {
      Bytes m = b;
      if (m.empty()) continue;
      m[rng() % m.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
      if (rng() % 3 == 0) m.push_back(static_cast<std::uint8_t>(rng()));
      ++mutated;
      try {
        core::decode_value(m);
      } catch (const DecodeError&) {
      } catch (...) {
        ++other_errors;
      }
    }
  }
  v.check(mismatches == 0, std::to_string(mismatches) + " round-trip mismatches");
  v.check(tags_seen == 8, "not every tag generated");
  v.check(not_decode == 0, std::to_string(not_decode) + " malformed inputs not DECODE_ERROR");
  v.check(other_errors == 0, std::to_string(other_errors) + " mutated inputs raised a non-decode error");
  v.note << "10000 values round-trip, " << malformed.size() + call.size() << " malformed inputs -> DECODE_ERROR, "
         << mutated << " mutations decoded safely";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Verdict&);
  };
  const Criterion criteria[] = {
      {1, "cnf implication matches truth tables", cnf_oracle},
      {2, "label lattice laws", lattice_laws},
      {3, "downgrade law", downgrade_law},
      {4, "password checker end to end", password_end_to_end},
      {5, "attack suite", attack_suite},
      {6, "clean room correctness", cleanroom_correctness},
      {7, "float-up containment", float_up},
      {8, "benchmark shape", bench_shape},
      {9, "codec round trips and fuzz", codec},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << v.note.str() << std::endl;
    if (!v.pass) ++failed;
  }
  std::cout << (9 - failed) << "/9 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
