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

#include "sealed/label/dclabel.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "sealed/error.hpp"

namespace sealed::label {

DCLabel owned_by(std::string_view principal) {
  Cnf p = cnf_from_principal(principal);
  return {p, p};
}

bool can_flow_to(const DCLabel& from, const DCLabel& to) {
  return cnf_implies(to.secrecy, from.secrecy) && cnf_implies(from.integrity, to.integrity);
}

bool can_flow_to_p(const Privilege& p, const DCLabel& from, const DCLabel& to) {
  return cnf_implies(cnf_and(p.cnf(), to.secrecy), from.secrecy) &&
         cnf_implies(cnf_and(p.cnf(), from.integrity), to.integrity);
}

DCLabel join(const DCLabel& a, const DCLabel& b) {
  return {cnf_and(a.secrecy, b.secrecy), cnf_or(a.integrity, b.integrity)};
}

DCLabel meet(const DCLabel& a, const DCLabel& b) {
  return {cnf_or(a.secrecy, b.secrecy), cnf_and(a.integrity, b.integrity)};
}

DCLabel downgrade(const Privilege& p, const DCLabel& l) {
  // A secrecy clause c is satisfied by P ∧ C2 exactly when P alone implies c
  // or C2 does, so the clauses P covers can be dropped outright.
  std::vector<Clause> kept;
  for (const auto& c : l.secrecy.clauses()) {
    if (!cnf_implies(p.cnf(), Cnf::from_clauses({c}))) kept.push_back(c);
  }
  return {Cnf::from_clauses(std::move(kept)), cnf_and(l.integrity, p.cnf())};
}

void encode_label(const DCLabel& l, ByteWriter& out) {
  encode_cnf(l.secrecy, out);
  encode_cnf(l.integrity, out);
}

Bytes encode_label(const DCLabel& l) {
  Bytes b;
  ByteWriter w(b);
  encode_label(l, w);
  return b;
}

DCLabel decode_label(ByteReader& in) {
  DCLabel l;
  l.secrecy = decode_cnf(in);
  l.integrity = decode_cnf(in);
  return l;
}

DCLabel decode_label(ByteView bytes) {
  ByteReader in(bytes);
  DCLabel l = decode_label(in);
  if (!in.empty()) throw MalformedLabel("trailing bytes");
  return l;
}

std::ostream& operator<<(std::ostream& os, const DCLabel& l) {
  return os << '<' << l.secrecy << ", " << l.integrity << '>';
}

std::ostream& operator<<(std::ostream& os, const Privilege& p) { return os << "Priv " << p.cnf(); }

std::string to_string(const DCLabel& l) {
  std::ostringstream os;
  os << l;
  return os.str();
}

}  // namespace sealed::label
