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

#ifndef SEALED_LABEL_CNF_HPP
#define SEALED_LABEL_CNF_HPP

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sealed/bytes.hpp"

namespace sealed::label {

// A named party. Strings for now; the codec length-prefixes names so a
// key-hash representation can replace them without touching the format.
class Principal {
 public:
  // Throws InvalidPrincipal on an empty name or an embedded NUL.
  explicit Principal(std::string name);

  const std::string& name() const { return name_; }

  // std::string ordering compares as unsigned bytes, i.e. UTF-8 byte order.
  friend auto operator<=>(const Principal&, const Principal&) = default;
  friend bool operator==(const Principal&, const Principal&) = default;

 private:
  std::string name_;
};

// A disjunction of principals. Principals are kept sorted and unique.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Principal> principals);
  Clause(std::initializer_list<std::string_view> names);

  const std::vector<Principal>& principals() const { return principals_; }
  bool empty() const { return principals_.empty(); }
  std::size_t size() const { return principals_.size(); }

  bool subset_of(const Clause& other) const;
  Clause unite(const Clause& other) const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Principal> principals_;
};

void encode_clause(const Clause& c, ByteWriter& out);
// Strict weak order on clauses by their byte encoding; the canonical order.
bool clause_encoding_less(const Clause& a, const Clause& b);

class Cnf;

// Canonical reduction: drops clauses that are supersets of another clause,
// collapses to False when the empty clause is present, sorts the rest.
Cnf cnf_reduce(std::vector<Clause> clauses);

// A conjunction of clauses, always held in canonical form: an antichain
// sorted by clause encoding. True is the empty conjunction; False is the
// conjunction holding only the empty clause.
class Cnf {
 public:
  Cnf() = default;

  static Cnf truth() { return Cnf(); }
  static Cnf falsity();
  // Builds a CNF in canonical form from an arbitrary clause set.
  static Cnf from_clauses(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  bool is_true() const { return clauses_.empty(); }
  bool is_false() const { return clauses_.size() == 1 && clauses_.front().empty(); }

  friend bool operator==(const Cnf&, const Cnf&) = default;

 private:
  friend Cnf cnf_reduce(std::vector<Clause> clauses);

  std::vector<Clause> clauses_;
};

// Throws InvalidPrincipal for an empty name.
Cnf cnf_from_principal(std::string_view name);
Cnf cnf_and(const Cnf& a, const Cnf& b);
Cnf cnf_or(const Cnf& a, const Cnf& b);
// a => b. For monotone CNFs the clause-subset check is exact: every clause
// of b must contain some clause of a.
bool cnf_implies(const Cnf& a, const Cnf& b);

void encode_cnf(const Cnf& a, ByteWriter& out);
Bytes encode_cnf(const Cnf& a);
// Throws MalformedLabel on truncation, bad UTF-8 or non-canonical input.
Cnf decode_cnf(ByteReader& in);
Cnf decode_cnf(ByteView bytes);

std::string to_string(const Cnf& a);
std::ostream& operator<<(std::ostream& os, const Cnf& a);
std::ostream& operator<<(std::ostream& os, const Clause& c);

}  // namespace sealed::label

#endif  // SEALED_LABEL_CNF_HPP
