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

#ifndef SEALED_LABEL_DCLABEL_HPP
#define SEALED_LABEL_DCLABEL_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "sealed/label/cnf.hpp"

namespace sealed::label {

// A disjunction-category label: <secrecy, integrity>.
struct DCLabel {
  Cnf secrecy;
  Cnf integrity;

  // <True, True>
  static DCLabel public_label() { return {}; }
  // <True, False>: flows to everything.
  static DCLabel bottom() { return {Cnf::truth(), Cnf::falsity()}; }
  // <False, True>: everything flows to it.
  static DCLabel top() { return {Cnf::falsity(), Cnf::truth()}; }

  friend bool operator==(const DCLabel&, const DCLabel&) = default;
};

// <{{p}}, {{p}}>: data owned and endorsed by a single principal.
DCLabel owned_by(std::string_view principal);

// The authority to bypass the clauses it implies.
class Privilege {
 public:
  Privilege() = default;
  explicit Privilege(Cnf description) : description_(std::move(description)) {}

  // The empty privilege (True) implies nothing but trivial clauses.
  static Privilege none() { return Privilege(); }

  const Cnf& cnf() const { return description_; }

  friend bool operator==(const Privilege&, const Privilege&) = default;

 private:
  Cnf description_;
};

bool can_flow_to(const DCLabel& from, const DCLabel& to);
// from ⊑_P to: P ∧ C2 ⟹ C1 and P ∧ I1 ⟹ I2.
bool can_flow_to_p(const Privilege& p, const DCLabel& from, const DCLabel& to);

DCLabel join(const DCLabel& a, const DCLabel& b);
DCLabel meet(const DCLabel& a, const DCLabel& b);

// The lowest label reachable from l with privilege p. For every l2:
//   can_flow_to_p(p, l, l2) == can_flow_to(downgrade(p, l), l2).
DCLabel downgrade(const Privilege& p, const DCLabel& l);

void encode_label(const DCLabel& l, ByteWriter& out);
Bytes encode_label(const DCLabel& l);
DCLabel decode_label(ByteReader& in);
DCLabel decode_label(ByteView bytes);

std::string to_string(const DCLabel& l);
std::ostream& operator<<(std::ostream& os, const DCLabel& l);
std::ostream& operator<<(std::ostream& os, const Privilege& p);

}  // namespace sealed::label

#endif  // SEALED_LABEL_DCLABEL_HPP
