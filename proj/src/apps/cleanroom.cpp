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

#include "sealed/apps/cleanroom.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sealed::apps {

using core::Value;

void validate_row(const Row& r) {
  if (r.strain.empty()) throw DecodeError("row has an empty strain");
  if (r.age < 0 || r.age > kMaxAge) throw DecodeError("row age out of range");
}

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

std::vector<Row> parse_rows(std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    line = trim(line);
    if (line.empty()) continue;
    auto bad = [&](const std::string& why) {
      return std::runtime_error("line " + std::to_string(n) + ": " + why);
    };
    auto comma = line.rfind(',');
    if (comma == std::string::npos) throw bad("expected strain,age");
    Row r{trim(line.substr(0, comma)), 0};
    std::string age = trim(line.substr(comma + 1));
    std::size_t used = 0;
    try {
      r.age = std::stoll(age, &used);
    } catch (const std::exception&) {
      throw bad("age is not an integer");
    }
    if (used != age.size()) throw bad("age is not an integer");
    if (!is_valid_utf8(as_bytes(r.strain))) throw bad("strain is not UTF-8");
    try {
      validate_row(r);
    } catch (const DecodeError& e) {
      throw bad(e.what());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Row> read_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file " + path.string());
  try {
    return parse_rows(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ", " + e.what());
  }
}

label::DCLabel provider_label(const std::string& principal) { return label::owned_by(principal); }

std::optional<std::string> extract_provider(const label::DCLabel& l) {
  const auto& clauses = l.secrecy.clauses();
  if (clauses.size() != 1 || clauses[0].principals().size() != 1) return std::nullopt;
  return clauses[0].principals()[0].name();
}

Row unlabel_row(ifc::IfcContext& ctx, const ProviderPrivileges& privs, const ifc::LabeledValue& row,
                std::string* provider) {
  auto name = extract_provider(row.label);
  Value v;
  if (name && *name == privs.name1) {
    v = ctx.unlabel_p(privs.priv1, row);
  } else if (name && *name == privs.name2) {
    v = ctx.unlabel_p(privs.priv2, row);
  } else {
    name.reset();
    v = ctx.unlabel(row);
  }
  if (provider) *provider = name.value_or("");
  return core::from_value<Row>(v);
}

std::vector<StrainMean> psi_mean_age(const std::vector<std::pair<std::string, Row>>& rows,
                                     const std::string& provider1, const std::string& provider2) {
  struct Acc {
    bool from1 = false, from2 = false;
    std::int64_t sum = 0;
    std::int64_t count = 0;
  };
  std::map<std::string, Acc> by_strain;
  for (const auto& [who, r] : rows) {
    if (who != provider1 && who != provider2) continue;
    Acc& a = by_strain[r.strain];
    (who == provider1 ? a.from1 : a.from2) = true;
    a.sum += r.age;
    ++a.count;
  }
  std::vector<StrainMean> out;
  for (const auto& [strain, a] : by_strain)
    if (a.from1 && a.from2) out.push_back({strain, static_cast<double>(a.sum) / static_cast<double>(a.count)});
  return out;
}

std::string format_result(const std::vector<StrainMean>& result) {
  std::string out;
  for (const auto& r : result) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", r.mean);
    out += r.strain + "\t" + buf + "\n";
  }
  return out;
}

Value result_to_value(const std::vector<StrainMean>& result) {
  Value::List l;
  for (const auto& r : result) l.push_back(Value::list({Value::string(r.strain), Value::real(r.mean)}));
  return Value::list(std::move(l));
}

std::vector<StrainMean> result_from_value(const Value& v) {
  std::vector<StrainMean> out;
  for (const auto& item : v.as_list()) {
    const auto& pair = item.as_list();
    if (pair.size() != 2) throw DecodeError("type mismatch: result entry needs two fields");
    out.push_back({pair[0].as_string(), pair[1].as_real()});
  }
  return out;
}

namespace {

crypto::AeadKey envelope_key(const crypto::Digest& shared, const crypto::KxPublicKey& eph,
                             const crypto::KxPublicKey& recipient) {
  Bytes salt;
  ByteWriter(salt).raw(crypto::view(eph)).raw(crypto::view(recipient));
  return crypto::hkdf_key(salt, crypto::view(shared), "sealed-result");
}

// Each envelope has its own key, so a fixed nonce is safe.
const crypto::AeadNonce kEnvelopeNonce{};

}  // namespace

Bytes encrypt_result(const crypto::KxPublicKey& recipient, ByteView plaintext) {
  crypto::KxKeyPair eph = crypto::KxKeyPair::generate();
  crypto::AeadKey key = envelope_key(crypto::x25519(eph.secret_key, recipient), eph.public_key, recipient);
  Bytes out(eph.public_key.begin(), eph.public_key.end());
  Bytes ct = crypto::aead_seal(key, kEnvelopeNonce, crypto::view(eph.public_key), plaintext);
  out.insert(out.end(), ct.begin(), ct.end());
  return out;
}

std::optional<Bytes> decrypt_result(const crypto::KxKeyPair& recipient, ByteView envelope) {
  if (envelope.size() < 32 + crypto::kAeadTagSize) return std::nullopt;
  crypto::KxPublicKey eph;
  std::copy_n(envelope.begin(), 32, eph.begin());
  crypto::Digest shared;
  try {
    shared = crypto::x25519(recipient.secret_key, eph);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  crypto::AeadKey key = envelope_key(shared, eph, recipient.public_key);
  return crypto::aead_open(key, kEnvelopeNonce, crypto::view(eph), envelope.subspan(32));
}

Bytes CleanroomConfig::encode() const {
  Bytes out;
  ByteWriter w(out);
  w.raw("cleanroom");
  w.u32(static_cast<std::uint32_t>(provider1.size())).raw(provider1);
  w.u32(static_cast<std::uint32_t>(provider2.size())).raw(provider2);
  w.raw(crypto::view(consumer_key));
  w.u64(readiness_threshold);
  return out;
}

CleanroomApi register_cleanroom(core::App& app, const CleanroomConfig& cfg) {
  if (cfg.provider1 == cfg.provider2) throw std::invalid_argument("providers need distinct principals");
  app.provision(cfg.encode());
  core::RefHandle db = app.new_ref(label::DCLabel::public_label(), Value::list({}));

  auto datasend = app.in_enclave<void(ifc::LabeledValue)>(
      "datasend", ifc::IfcContext::default_state(), [db](ifc::IfcContext& ctx, const ifc::LabeledValue& row) {
        // Shape check only; the row stays labeled.
        core::from_value<Row>(core::decode_value(row.payload));
        Value::List rows = ctx.read_ref(db.get()).as_list();
        rows.push_back(Value::labeled(row));
        ctx.write_ref(db.get(), Value::list(std::move(rows)));
      });

  // The privileges live only in this closure.
  ProviderPrivileges privs{cfg.provider1, label::Privilege(label::cnf_from_principal(cfg.provider1)),
                           cfg.provider2, label::Privilege(label::cnf_from_principal(cfg.provider2))};
  auto run_query = app.in_enclave<Bytes()>(
      "runQuery", ifc::IfcContext::default_state(), [db, privs, cfg](ifc::IfcContext& ctx) {
        Value::List stored = ctx.read_ref(db.get()).as_list();

        std::size_t n1 = 0, n2 = 0;
        for (const auto& item : stored) {
          auto who = extract_provider(item.as_labeled().label);
          if (who == privs.name1) ++n1;
          if (who == privs.name2) ++n2;
        }
        if (n1 < cfg.readiness_threshold || n2 < cfg.readiness_threshold)
          throw NotReady("waiting for provider uploads");

        std::vector<std::pair<std::string, Row>> rows;
        rows.reserve(stored.size());
        for (const auto& item : stored) {
          std::string who;
          Row r = unlabel_row(ctx, privs, item.as_labeled(), &who);
          rows.emplace_back(std::move(who), std::move(r));
        }
        auto result = psi_mean_age(rows, privs.name1, privs.name2);
        return encrypt_result(cfg.consumer_key, core::encode_value(result_to_value(result)));
      });

  return {datasend, run_query, db};
}

void build_cleanroom_app(core::App& app, const CleanroomConfig& cfg, const CleanroomClients& clients) {
  CleanroomApi api = register_cleanroom(app, cfg);
  std::ostream* out = clients.out;

  auto provider_body = [&](const std::string& role, const std::string& principal) {
    return [&, role, principal](core::Client& client) {
      auto it = clients.data_files.find(role);
      if (it == clients.data_files.end()) throw std::runtime_error("no data file configured for " + role);
      std::vector<Row> rows = read_rows(it->second);
      // The provider vouches for its own rows, which takes its privilege.
      label::Privilege own(label::cnf_from_principal(principal));
      auto ctx = ifc::IfcContext::default_state(own);
      for (const auto& r : rows)
        client.gateway(api.datasend.apply(ctx.label_p(own, provider_label(principal), core::to_value(r))));
      if (out) *out << role << " sent " << rows.size() << " rows" << std::endl;
    };
  };
  app.run_client(std::string(kProvider1Role), provider_body(std::string(kProvider1Role), cfg.provider1));
  app.run_client(std::string(kProvider2Role), provider_body(std::string(kProvider2Role), cfg.provider2));

  app.run_client(std::string(kConsumerRole), [&](core::Client& client) {
    if (!clients.consumer_keys) throw std::runtime_error("consumer key pair not configured");
    Bytes envelope = client.gateway(api.run_query);
    auto plain = decrypt_result(*clients.consumer_keys, envelope);
    if (!plain) throw std::runtime_error("result envelope did not decrypt under the consumer key");
    auto result = result_from_value(core::decode_value(*plain));
    if (out) *out << format_result(result) << std::flush;
  });
}

}  // namespace sealed::apps
